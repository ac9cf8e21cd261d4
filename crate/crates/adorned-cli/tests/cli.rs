use adorned::adorn::Adorn;
use adorned::games::{GameStore, Side};
use adorned::oracle;
use adorned::universe::Universe;
use adorned_cli::parse::parse_game;
use adorned_cli::render::render;
use adorned_cli::{config, CliError, OracleSettings, Session};
use std::path::PathBuf;

#[test]
fn sugar_forms_parse_to_their_games() {
    let mut s = GameStore::new();
    assert_eq!(parse_game("s(0)", &mut s).unwrap(), s.zero());
    assert_eq!(parse_game("star", &mut s).unwrap(), s.star());
    assert_eq!(parse_game("s(-3/2)", &mut s).unwrap(), s.score(Adorn::ratio(-3, 2).unwrap()));

    let two = parse_game("int(2)", &mut s).unwrap();
    assert_eq!(s.rank(two), 2);
    assert!(s.is_right_atomic(two));
    let minus_one = parse_game("int(-1)", &mut s).unwrap();
    assert_eq!(s.conjugate(minus_one), parse_game("int(1)", &mut s).unwrap());
    assert_eq!(parse_game("int(0)", &mut s).unwrap(), s.zero());
}

#[test]
fn bracket_forms_parse_to_interned_games() {
    let mut s = GameStore::new();
    let zero = s.zero();
    let star = s.star();
    let expected = s
        .intern(Side::Options(vec![zero, star]), Side::Options(vec![star]))
        .unwrap();
    assert_eq!(parse_game("<s(0),star|star>", &mut s).unwrap(), expected);
    assert_eq!(parse_game(" < s(0) , star | star > ", &mut s).unwrap(), expected);

    let atom = s
        .intern(Side::Atom(Adorn::ratio(3, 2).unwrap()), Side::Options(vec![zero]))
        .unwrap();
    assert_eq!(parse_game("<e^3/2|s(0)>", &mut s).unwrap(), atom);
}

#[test]
fn parse_errors_carry_positions() {
    let mut s = GameStore::new();
    let err = parse_game("<s(0)", &mut s).unwrap_err();
    assert_eq!(err.pos, 5);
    assert!(err.message.contains("'|'"));

    let err = parse_game("e^1", &mut s).unwrap_err();
    assert_eq!(err.pos, 0);

    let err = parse_game("<e^1|e^2", &mut s).unwrap_err();
    assert!(err.message.contains("'>'"));

    let err = parse_game("s(1/0)", &mut s).unwrap_err();
    assert!(err.message.contains("adorn"));

    let err = parse_game("star x", &mut s).unwrap_err();
    assert!(err.message.contains("trailing"));

    assert!(parse_game("", &mut s).is_err());
    assert!(parse_game("<|s(0)>", &mut s).is_err());
}

#[test]
fn ascii_rendering_round_trips_on_pools() {
    let mut s = GameStore::new();
    let mut eval = adorned::outcomes::Evaluator::new();
    let dicot = oracle::kernel_pool(&mut s, &Universe::dicot_misere(), 2, &[Adorn::zero()]).unwrap();
    let scoring = oracle::sampled_kernel_pool(
        &mut s,
        &Universe::dicot_scoring(),
        2,
        &[Adorn::integer(-1), Adorn::zero(), Adorn::integer(1)],
        7,
        40,
    )
    .unwrap();
    let free = oracle::free_pool(&mut s, &mut eval, &Universe::normal(), 2, &[Adorn::zero()]).unwrap();
    let mut games = Vec::new();
    games.extend(&dicot.games);
    games.extend(&scoring.games);
    games.extend(&free.games);
    let ratio = s.pura(Adorn::ratio(3, 2).unwrap(), Adorn::integer(-1));
    games.push(ratio);
    for g in games {
        let text = render(&s, g, false);
        assert_eq!(parse_game(&text, &mut s).unwrap(), g, "round trip failed on {text}");
    }
}

#[test]
fn unicode_rendering_uses_angle_brackets_and_atoms() {
    let mut s = GameStore::new();
    let zero = s.zero();
    assert_eq!(render(&s, zero, true), "⟨∅^0|∅^0⟩");
    assert_eq!(render(&s, zero, false), "<e^0|e^0>");
    let star = s.star();
    assert_eq!(render(&s, star, true), "⟨⟨∅^0|∅^0⟩|⟨∅^0|∅^0⟩⟩");
}

#[test]
fn outcome_command_reports_pair_and_class() {
    let mut session = Session::new();
    let out = adorned_cli::run_outcome(&mut session, "s(0)", "misere", false).unwrap();
    assert!(out.human.contains("(+1, -1)"));
    assert!(out.human.contains("class N"));
    assert_eq!(out.failed_checks, 0);
    assert_eq!(out.json["outcome"]["left"], "+1");
    assert_eq!(out.json["outcome"]["right"], "-1");
    assert_eq!(out.json["class"], "N");
    assert_eq!(out.json["universe"], "misere");

    let out = adorned_cli::run_outcome(&mut session, "<s(1)|s(0)>", "dicot-scoring", false).unwrap();
    assert!(out.json["class"].is_null());
    assert_eq!(out.json["outcome"]["left"], "1");
    assert_eq!(out.json["outcome"]["right"], "0");
}

#[test]
fn compare_command_reports_the_four_relations() {
    let mut session = Session::new();
    let out =
        adorned_cli::run_compare(&mut session, "<s(0)|star>", "s(0)", "dicot-misere", false).unwrap();
    assert_eq!(out.json["relation"], "||");

    let out = adorned_cli::run_compare(&mut session, "<s(0)|star>", "s(0)", "normal", false).unwrap();
    assert_eq!(out.json["relation"], ">=");

    let out = adorned_cli::run_compare(&mut session, "s(0)", "s(0)", "normal", false).unwrap();
    assert_eq!(out.json["relation"], "=");

    let out = adorned_cli::run_compare(&mut session, "s(0)", "<s(0)|star>", "normal", false).unwrap();
    assert_eq!(out.json["relation"], "<=");
}

#[test]
fn compare_json_schema_is_stable() {
    let mut session = Session::new();
    let out = adorned_cli::run_compare(
        &mut session,
        "<<s(0)|s(2)>|<s(1)|s(0)>>",
        "s(1)",
        "guaranteed",
        false,
    )
    .unwrap();
    let object = out.json.as_object().unwrap();
    let mut keys: Vec<_> = object.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        ["lhs", "proviso", "relation", "rhs", "timings", "universe", "witness"]
    );
    assert_eq!(out.json["relation"], "||");
    assert_eq!(out.json["proviso"], "pass-allowed left score 0 < 1");
    assert!(out.json["witness"].is_null());

    let out = adorned_cli::run_compare(&mut session, "<s(1)|s(2)>", "s(1)", "guaranteed", false)
        .unwrap();
    assert_eq!(out.json["witness"], "Right's move to <e^2|e^2> is unanswered");
    assert!(out.json["proviso"].is_null());
}

#[test]
fn usage_errors_are_distinguished() {
    let mut session = Session::new();
    let err = adorned_cli::run_outcome(&mut session, "s(0", "misere", false).unwrap_err();
    assert!(matches!(err, CliError::Parse(_)));

    let err = adorned_cli::run_outcome(&mut session, "s(0)", "nowhere", false).unwrap_err();
    assert!(matches!(err, CliError::Usage(_)));
    assert!(err.to_string().contains("dicot-misere"));

    let err = adorned_cli::run_outcome(&mut session, "<e^2|e^1>", "guaranteed", false).unwrap_err();
    assert!(err.to_string().contains("not a member"));
    assert!(err.to_string().contains("<e^2|e^1>"));

    let err = adorned_cli::run_compare(&mut session, "s(0)", "s(1)", "free-scoring", false)
        .unwrap_err();
    assert!(matches!(err, CliError::Engine(_)));
}

#[test]
fn oracle_command_runs_clean_and_writes_a_report() {
    let mut session = Session::new();
    let report = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_oracle_report.jsonl");
    let settings = OracleSettings {
        max_rank: 2,
        seed: 7,
        adorns: None,
        pool_target: 60,
        witness_count: 200,
        report: Some(report.clone()),
    };
    let out = adorned_cli::run_oracle(&mut session, "dicot-misere", &settings).unwrap();
    assert_eq!(out.failed_checks, 0);
    assert_eq!(out.json["pool_size"], 10);
    assert_eq!(out.json["sweeps"]["soundness"]["refuted"], 0);
    assert_eq!(out.json["sweeps"]["refutation"]["exhausted"], 0);
    assert_eq!(out.json["sweeps"]["linked"]["violated"], 0);
    let lines = std::fs::read_to_string(&report).unwrap();
    let total = out.json["sweeps"]["soundness"]["records"].as_u64().unwrap()
        + out.json["sweeps"]["refutation"]["records"].as_u64().unwrap()
        + out.json["sweeps"]["projection"]["records"].as_u64().unwrap()
        + out.json["sweeps"]["linked"]["records"].as_u64().unwrap();
    assert_eq!(lines.lines().count() as u64, total);
    let first: serde_json::Value = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    for key in ["check", "universe", "lhs", "rhs", "verdict", "witness", "micros"] {
        assert!(first.get(key).is_some(), "missing report key {key}");
    }

    let err = adorned_cli::run_oracle(&mut session, "free-scoring", &settings).unwrap_err();
    assert!(matches!(err, CliError::Usage(_)));
}

#[test]
fn guaranteed_oracle_includes_the_embedding_sweep() {
    let mut session = Session::new();
    let settings = OracleSettings {
        max_rank: 1,
        seed: 7,
        adorns: None,
        pool_target: 25,
        witness_count: 60,
        report: None,
    };
    let out = adorned_cli::run_oracle(&mut session, "guaranteed", &settings).unwrap();
    assert_eq!(out.failed_checks, 0);
    assert_eq!(out.json["sweeps"]["embedding"]["disagrees"], 0);
    assert!(out.json["sweeps"]["embedding"]["records"].as_u64().unwrap() > 0);
}

#[test]
fn selftest_passes_every_regression() {
    let mut session = Session::new();
    let out = adorned_cli::run_selftest(&mut session).unwrap();
    assert_eq!(out.failed_checks, 0);
    assert_eq!(out.json["checks"].as_array().unwrap().len(), 15);
    assert!(out.human.contains("15 checks, 0 failures"));
}

#[test]
fn config_files_parse_and_reject_bad_keys() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("adorned_test.conf");
    std::fs::write(
        &path,
        "# defaults\nuniverse = dicot-scoring\nseed = 5\nadorns = -1,0,1/2\npool_target = 30\n",
    )
    .unwrap();
    let config = config::load(&path).unwrap();
    assert_eq!(config.universe.as_deref(), Some("dicot-scoring"));
    assert_eq!(config.seed, Some(5));
    assert_eq!(config.pool_target, Some(30));
    assert_eq!(
        config.adorns.unwrap(),
        vec![Adorn::integer(-1), Adorn::zero(), Adorn::ratio(1, 2).unwrap()]
    );

    let bad = dir.join("adorned_bad.conf");
    std::fs::write(&bad, "colour = blue\n").unwrap();
    let err = config::load(&bad).unwrap_err();
    assert!(err.to_string().contains("unknown key"));

    assert!(config::parse_adorn_list("1/0").is_err());
}
