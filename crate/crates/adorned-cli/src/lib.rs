//! Command logic for the adorned CLI: outcome, compare, oracle, selftest.

pub mod config;
pub mod parse;
pub mod render;

use adorned::adorn::Adorn;
use adorned::compare::{self, GeReason, Verdict};
use adorned::error::EngineError;
use adorned::games::{GameId, GameStore};
use adorned::oracle::{self, Pool, SweepRecord};
use adorned::outcomes::{outcome_class, Evaluator, OutcomeClass, OutcomeValue};
use adorned::universe::{AdornDomain, ProvisoKind, Universe};
use parse::ParseError;
use render::render;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

/// Errors that abort a command before any check runs (exit code 2).
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Engine(#[from] EngineError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Store and evaluator shared by a command invocation.
#[derive(Default)]
pub struct Session {
    pub store: GameStore,
    pub eval: Evaluator,
}

impl Session {
    pub fn new() -> Self {
        Session {
            store: GameStore::new(),
            eval: Evaluator::new(),
        }
    }
}

/// A command's result: human text, JSON document, and failed-check count.
#[derive(Debug, Clone)]
pub struct Outputs {
    pub human: String,
    pub json: Value,
    pub failed_checks: usize,
}

/// Looks up a built-in universe, listing the valid names on failure.
pub fn resolve_universe(name: &str) -> Result<Universe, CliError> {
    Universe::by_name(name).ok_or_else(|| {
        let names = Universe::builtins()
            .iter()
            .map(|u| u.name().to_string())
            .collect::<Vec<_>>()
            .join(", ");
        CliError::Usage(format!("unknown universe '{name}'; expected one of: {names}"))
    })
}

/// Evaluates a game's outcome pair (and class in win/loss universes).
pub fn run_outcome(
    session: &mut Session,
    game_text: &str,
    universe: &str,
    unicode: bool,
) -> Result<Outputs, CliError> {
    let started = Instant::now();
    let u = resolve_universe(universe)?;
    let g = parse::parse_game(game_text, &mut session.store)?;
    let pair = session
        .eval
        .outcome(&session.store, g, &u)
        .map_err(|e| not_a_member(&session.store, e, unicode))?;
    let class = if u.is_scoring() {
        None
    } else {
        Some(outcome_class(&pair, &u)?)
    };
    let rendered = render(&session.store, g, unicode);
    let mut human = format!("o({rendered}) = {pair} in {}", u.name());
    if let Some(c) = class {
        write!(human, " — class {c}").expect("writing to a string");
    }
    let json = json!({
        "game": rendered,
        "universe": u.name(),
        "outcome": { "left": pair.left.to_string(), "right": pair.right.to_string() },
        "class": class.map(|c| c.to_string()),
        "timings": { "micros": started.elapsed().as_micros() as u64 },
    });
    Ok(Outputs {
        human,
        json,
        failed_checks: 0,
    })
}

fn failure_fields(
    store: &GameStore,
    verdict: &Verdict,
    unicode: bool,
) -> (Option<String>, Option<String>) {
    match &verdict.reason {
        GeReason::Satisfied => (None, None),
        GeReason::Cnp(c) => (
            Some(format!(
                "{}'s move to {} is unanswered",
                c.mover,
                render(store, c.option, unicode)
            )),
            None,
        ),
        GeReason::Proviso(p) => (None, Some(p.to_string())),
    }
}

fn not_a_member(store: &GameStore, e: EngineError, unicode: bool) -> CliError {
    match e {
        EngineError::NotAMember { game, universe } => CliError::Usage(format!(
            "{} is not a member of {universe}",
            render(store, game, unicode)
        )),
        other => CliError::Engine(other),
    }
}

fn describe_failure(store: &GameStore, verdict: &Verdict, unicode: bool) -> String {
    match failure_fields(store, verdict, unicode) {
        (Some(witness), _) => format!("fails the common normal part: {witness}"),
        (_, Some(proviso)) => format!("fails the proviso: {proviso}"),
        _ => "holds".to_string(),
    }
}

/// Compares two games, reporting `>=`, `<=`, `=`, or `||` with the failure
/// trace of the forward direction.
pub fn run_compare(
    session: &mut Session,
    lhs_text: &str,
    rhs_text: &str,
    universe: &str,
    unicode: bool,
) -> Result<Outputs, CliError> {
    let started = Instant::now();
    let u = resolve_universe(universe)?;
    let g = parse::parse_game(lhs_text, &mut session.store)?;
    let h = parse::parse_game(rhs_text, &mut session.store)?;
    let forward = compare::ge(&session.store, &mut session.eval, g, h, &u)
        .map_err(|e| not_a_member(&session.store, e, unicode))?;
    let backward = compare::ge(&session.store, &mut session.eval, h, g, &u)
        .map_err(|e| not_a_member(&session.store, e, unicode))?;
    let relation = match (forward.holds, backward.holds) {
        (true, true) => "=",
        (true, false) => ">=",
        (false, true) => "<=",
        (false, false) => "||",
    };
    let (witness, proviso) = failure_fields(&session.store, &forward, unicode);
    let (lhs, rhs) = (
        render(&session.store, g, unicode),
        render(&session.store, h, unicode),
    );
    let mut human = format!("{lhs} {relation} {rhs} in {}", u.name());
    if !forward.holds {
        let why = describe_failure(&session.store, &forward, unicode);
        write!(human, "\n  {lhs} >= {rhs} {why}").expect("writing to a string");
    }
    if !backward.holds {
        let why = describe_failure(&session.store, &backward, unicode);
        write!(human, "\n  {rhs} >= {lhs} {why}").expect("writing to a string");
    }
    let json = json!({
        "lhs": lhs,
        "rhs": rhs,
        "universe": u.name(),
        "relation": relation,
        "witness": witness,
        "proviso": proviso,
        "timings": { "micros": started.elapsed().as_micros() as u64 },
    });
    Ok(Outputs {
        human,
        json,
        failed_checks: 0,
    })
}

/// Tunable oracle inputs after merging flags over config defaults.
#[derive(Debug, Clone)]
pub struct OracleSettings {
    pub max_rank: u32,
    pub seed: u64,
    pub adorns: Option<Vec<Adorn>>,
    pub pool_target: usize,
    pub witness_count: usize,
    pub report: Option<PathBuf>,
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings {
            max_rank: 2,
            seed: 7,
            adorns: None,
            pool_target: 60,
            witness_count: 200,
            report: None,
        }
    }
}

fn build_pool(
    session: &mut Session,
    u: &Universe,
    settings: &OracleSettings,
) -> Result<Pool, CliError> {
    let adorns = settings.adorns.clone().unwrap_or_else(|| match u.domain() {
        AdornDomain::ZeroOnly => vec![Adorn::zero()],
        AdornDomain::AllRationals => vec![Adorn::integer(-1), Adorn::zero(), Adorn::integer(1)],
    });
    let pool = if u.proviso() == ProvisoKind::DicotOutcomes {
        oracle::sampled_kernel_pool(
            &mut session.store,
            u,
            settings.max_rank,
            &adorns,
            settings.seed,
            settings.pool_target,
        )?
    } else {
        oracle::sampled_free_pool(
            &mut session.store,
            &mut session.eval,
            u,
            settings.max_rank,
            &adorns,
            settings.seed,
            settings.pool_target,
        )?
    };
    Ok(pool)
}

fn sweep_summary(records: &[SweepRecord]) -> Value {
    let count = |verdict: &str| records.iter().filter(|r| r.verdict == verdict).count();
    json!({
        "records": records.len(),
        "confirmed": count("confirmed"),
        "refuted": count("refuted"),
        "exhausted": count("exhausted"),
        "preserved": count("preserved"),
        "violated": count("violated"),
        "witnessed": count("witnessed"),
        "consistent": count("consistent"),
        "agrees": count("agrees"),
        "disagrees": count("disagrees"),
    })
}

/// Runs the validation sweeps over a seeded pool and reports failures.
pub fn run_oracle(
    session: &mut Session,
    universe: &str,
    settings: &OracleSettings,
) -> Result<Outputs, CliError> {
    let started = Instant::now();
    let u = resolve_universe(universe)?;
    if u.proviso() == ProvisoKind::OracleOnly {
        return Err(CliError::Usage(format!(
            "universe '{}' has no constructive order test to sweep against",
            u.name()
        )));
    }
    let pool = build_pool(session, &u, settings)?;
    let witnesses = oracle::sampled_rank_extension(
        &mut session.store,
        &mut session.eval,
        &pool,
        settings.seed.wrapping_add(1),
        settings.witness_count,
    );

    let soundness =
        oracle::soundness_sweep(&mut session.store, &mut session.eval, &pool, &witnesses)?;
    let refutation =
        oracle::refutation_sweep(&mut session.store, &mut session.eval, &pool, &witnesses)?;
    let projection = oracle::projection_sweep(&mut session.store, &mut session.eval, &pool)?;
    let linked =
        oracle::linked_agreement_sweep(&mut session.store, &mut session.eval, &pool, &witnesses)?;
    let embedding = if u.proviso() == ProvisoKind::GuaranteedPassAllowed {
        let zero_pool = oracle::free_pool(
            &mut session.store,
            &mut session.eval,
            &Universe::normal(),
            settings.max_rank.min(2),
            &[Adorn::zero()],
        )?;
        Some(oracle::embedding_sweep(
            &mut session.store,
            &mut session.eval,
            &zero_pool,
            &u,
        )?)
    } else {
        None
    };

    let count = |records: &[SweepRecord], verdict: &str| {
        records.iter().filter(|r| r.verdict == verdict).count()
    };
    let failed_checks = count(&soundness, "refuted")
        + count(&projection, "violated")
        + count(&linked, "violated")
        + embedding.as_ref().map_or(0, |r| count(r, "disagrees"));
    let exhausted = count(&refutation, "exhausted") + count(&linked, "exhausted");

    let mut all_records = Vec::new();
    all_records.extend(soundness.iter().cloned());
    all_records.extend(refutation.iter().cloned());
    all_records.extend(projection.iter().cloned());
    all_records.extend(linked.iter().cloned());
    if let Some(records) = &embedding {
        all_records.extend(records.iter().cloned());
    }
    if let Some(path) = &settings.report {
        oracle::write_report(path, &all_records)?;
    }

    let mut human = format!(
        "oracle sweeps in {} — pool {} games (max rank {}, seed {}), witness pool {} games\n",
        u.name(),
        pool.games.len(),
        pool.max_rank,
        settings.seed,
        witnesses.games.len(),
    );
    let line = |name: &str, records: &[SweepRecord], bad: usize| {
        format!("  {name}: {} records, {bad} failures\n", records.len())
    };
    human.push_str(&line("soundness", &soundness, count(&soundness, "refuted")));
    human.push_str(&format!(
        "  refutation: {} records, {} witnessed, {} pool-exhausted\n",
        refutation.len(),
        count(&refutation, "refuted"),
        count(&refutation, "exhausted"),
    ));
    human.push_str(&line("projection", &projection, count(&projection, "violated")));
    human.push_str(&format!(
        "  linked: {} records, {} witnessed, {} pool-exhausted, {} violated\n",
        linked.len(),
        count(&linked, "witnessed"),
        count(&linked, "exhausted"),
        count(&linked, "violated"),
    ));
    if let Some(records) = &embedding {
        human.push_str(&line("embedding", records, count(records, "disagrees")));
    }
    if let Some(path) = &settings.report {
        human.push_str(&format!("  report: {}\n", path.display()));
    }
    human.push_str(&if failed_checks == 0 {
        "all sweeps clean".to_string()
    } else {
        format!("{failed_checks} FAILED checks")
    });

    let json = json!({
        "universe": u.name(),
        "pool_size": pool.games.len(),
        "witness_pool_size": witnesses.games.len(),
        "max_rank": pool.max_rank,
        "seed": settings.seed,
        "sweeps": {
            "soundness": sweep_summary(&soundness),
            "refutation": sweep_summary(&refutation),
            "projection": sweep_summary(&projection),
            "linked": sweep_summary(&linked),
            "embedding": embedding.as_ref().map(|r| sweep_summary(r)),
        },
        "exhausted": exhausted,
        "failed_checks": failed_checks,
        "report": settings.report.as_ref().map(|p| p.display().to_string()),
        "timings": { "micros": started.elapsed().as_micros() as u64 },
    });
    Ok(Outputs {
        human,
        json,
        failed_checks,
    })
}

fn score(n: i64) -> OutcomeValue {
    OutcomeValue::Score(Adorn::integer(n))
}

/// Runs the built-in regression examples; any failure is a failed check.
pub fn run_selftest(session: &mut Session) -> Result<Outputs, CliError> {
    let started = Instant::now();
    let mut checks: Vec<(String, bool)> = Vec::new();
    selftest_checks(session, &mut checks)?;
    let failed_checks = checks.iter().filter(|(_, ok)| !ok).count();
    let mut human = String::new();
    for (name, ok) in &checks {
        human.push_str(&format!(
            "  {} {name}\n",
            if *ok { "ok    " } else { "FAILED" }
        ));
    }
    human.push_str(&format!(
        "selftest: {} checks, {failed_checks} failures",
        checks.len()
    ));
    let json = json!({
        "checks": checks
            .iter()
            .map(|(name, ok)| json!({ "name": name, "ok": ok }))
            .collect::<Vec<_>>(),
        "failed_checks": failed_checks,
        "timings": { "micros": started.elapsed().as_micros() as u64 },
    });
    Ok(Outputs {
        human,
        json,
        failed_checks,
    })
}

fn selftest_checks(
    session: &mut Session,
    checks: &mut Vec<(String, bool)>,
) -> Result<(), CliError> {
    let misere = Universe::misere();
    let normal = Universe::normal();
    let dicot = Universe::dicot_misere();
    let guaranteed = Universe::guaranteed_scoring();
    let dicot_scoring = Universe::dicot_scoring();

    let game = |session: &mut Session, text: &str| -> Result<GameId, CliError> {
        Ok(parse::parse_game(text, &mut session.store)?)
    };

    let zero = game(session, "s(0)")?;
    let pair = session.eval.outcome(&session.store, zero, &misere)?;
    checks.push((
        "outcome of s(0) in misere is (+1, -1), class N".into(),
        pair.left == OutcomeValue::WinLoss(1)
            && pair.right == OutcomeValue::WinLoss(-1)
            && outcome_class(&pair, &misere)? == OutcomeClass::N,
    ));

    let pair = session.eval.outcome(&session.store, zero, &normal)?;
    checks.push((
        "outcome of s(0) in normal is (-1, +1), class P".into(),
        outcome_class(&pair, &normal)? == OutcomeClass::P,
    ));

    let g = game(session, "<s(0),star|star>")?;
    let v = compare::ge(&session.store, &mut session.eval, g, zero, &dicot)?;
    checks.push(("<s(0),star|star> >= s(0) in dicot-misere".into(), v.holds));

    let g = game(session, "<s(0)|star>")?;
    let incomparable = compare::incomparable(&session.store, &mut session.eval, g, zero, &dicot)?;
    checks.push(("<s(0)|star> incomparable with s(0) in dicot-misere".into(), incomparable));

    let classic = compare::ge_normal_classic(&mut session.store, &mut session.eval, g, zero)?;
    checks.push(("<s(0)|star> >= s(0) in classic normal play".into(), classic));

    let waiting = game(session, "<s(1)|<s(1)|s(0)>>")?;
    let one = game(session, "s(1)")?;
    let v = compare::ge(&session.store, &mut session.eval, waiting, one, &guaranteed)?;
    checks.push(("<s(1)|<s(1)|s(0)>> >= s(1) in guaranteed".into(), v.holds));

    let g = game(session, "<s(1)|s(2)>")?;
    let v = compare::ge(&session.store, &mut session.eval, g, one, &guaranteed)?;
    checks.push((
        "<s(1)|s(2)> >= s(1) fails via the common normal part".into(),
        !v.holds && matches!(v.reason, GeReason::Cnp(_)),
    ));

    let trap = game(session, "<<s(0)|s(2)>|<s(1)|s(0)>>")?;
    let v = compare::ge(&session.store, &mut session.eval, trap, one, &guaranteed)?;
    checks.push((
        "<<s(0)|s(2)>|<s(1)|s(0)>> >= s(1) fails via the proviso".into(),
        !v.holds && matches!(v.reason, GeReason::Proviso(_)),
    ));

    let pl = session.eval.pass_allowed_left(&session.store, trap, &guaranteed)?;
    let ol = session.eval.outcome(&session.store, trap, &guaranteed)?.left;
    checks.push((
        "pass-allowed left of the trap game is 0 while its left outcome is 2".into(),
        pl == score(0) && ol == score(2),
    ));

    let pl = session.eval.pass_allowed_left(&session.store, waiting, &guaranteed)?;
    let pr = session.eval.pass_allowed_right(&session.store, waiting, &guaranteed)?;
    checks.push((
        "pass-allowed scores of <s(1)|<s(1)|s(0)>> are both 1".into(),
        pl == score(1) && pr == score(1),
    ));

    let star = game(session, "star")?;
    let star_adjoint = oracle::adjoint(&mut session.store, zero)?;
    let total = {
        let adj = oracle::adjoint(&mut session.store, star)?;
        session.store.sum(star, adj)
    };
    let pair = session.eval.outcome_unchecked(&session.store, total, &misere);
    checks.push((
        "adjoint of s(0) is star and star + star-adjoint is a P-position".into(),
        star_adjoint == star && outcome_class(&pair, &misere)? == OutcomeClass::P,
    ));

    let mut density_ok = true;
    for target in [OutcomeClass::L, OutcomeClass::R, OutcomeClass::N, OutcomeClass::P] {
        let w = oracle::density_witness(&mut session.store, star, target, &misere)?;
        let total = session.store.sum(star, w);
        let pair = session.eval.outcome_unchecked(&session.store, total, &misere);
        density_ok &= outcome_class(&pair, &misere)? == target;
    }
    checks.push(("density witnesses realize all four classes for star".into(), density_ok));

    let (x, y) = (Adorn::integer(2), Adorn::integer(-1));
    let w = oracle::scoring_density_witness(
        &mut session.store,
        &mut session.eval,
        zero,
        &x,
        &y,
        &dicot_scoring,
    )?;
    let total = session.store.sum(zero, w);
    let pair = session.eval.outcome_unchecked(&session.store, total, &dicot_scoring);
    checks.push((
        "scoring density witness pins s(0) to (2, -1) in dicot-scoring".into(),
        pair.left == score(2) && pair.right == score(-1),
    ));

    let ordered = game(session, "<e^1|e^2>")?;
    let reversed = game(session, "<e^2|e^1>")?;
    checks.push((
        "guaranteed membership accepts <e^1|e^2> and rejects <e^2|e^1>".into(),
        session.eval.member(&session.store, ordered, &guaranteed)
            && !session.eval.member(&session.store, reversed, &guaranteed),
    ));

    let pool = oracle::kernel_pool(&mut session.store, &dicot, 2, &[Adorn::zero()])?;
    checks.push((
        "dicot-misere kernel enumeration to rank 2 yields 10 games".into(),
        pool.games.len() == 10,
    ));

    Ok(())
}
