//! Brute-force validation: pools, superordinate checks, adjoints, and density.

use crate::adorn::Adorn;
use crate::compare::{self, Player};
use crate::error::EngineError;
use crate::games::{GameId, GameStore, Side};
use crate::outcomes::{Evaluator, OutcomeClass, OutcomeValue};
use crate::universe::{self, Universe};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::io::Write;
use std::path::Path;
use std::time::Instant;

/// A deterministic batch of member games standing in for "all X ∈ U".
#[derive(Debug, Clone)]
pub struct Pool {
    pub universe: Universe,
    pub games: Vec<GameId>,
    pub max_rank: u32,
    pub adorn_pool: Vec<Adorn>,
    pub sampled: bool,
}

/// Result of checking `g ≽ h` against every witness in a pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForce {
    ConfirmedOnPool,
    RefutedWithWitness { witness: GameId, side: Player },
}

/// One machine-readable line of a sweep report.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub check: String,
    pub universe: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: String,
    pub witness: Option<String>,
    pub micros: u128,
}

/// Exhaustive kernel pool; errors when enumeration would exceed the guard.
pub fn kernel_pool(
    store: &mut GameStore,
    u: &Universe,
    max_rank: u32,
    adorns: &[Adorn],
) -> Result<Pool, EngineError> {
    let games = universe::enumerate_kernel(store, u, max_rank, adorns)?;
    Ok(Pool {
        universe: u.clone(),
        games,
        max_rank,
        adorn_pool: adorns.to_vec(),
        sampled: false,
    })
}

/// Kernel pool that falls back to seeded sampling on levels too large to
/// enumerate, keeping roughly `target` games in total.
pub fn sampled_kernel_pool(
    store: &mut GameStore,
    u: &Universe,
    max_rank: u32,
    adorns: &[Adorn],
    seed: u64,
    target: usize,
) -> Result<Pool, EngineError> {
    for a in adorns {
        if !u.domain().contains(a) {
            return Err(EngineError::AdornOutsideDomain {
                adorn: a.to_string(),
                universe: u.name().to_string(),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut games = Vec::new();
    for a in adorns {
        let id = store.score(a.clone());
        if seen.insert(id) {
            games.push(id);
        }
    }
    let mut sampled = false;
    for level in 1..=max_rank {
        let remaining_levels = (max_rank - level + 1) as usize;
        let budget = target.saturating_sub(games.len()) / remaining_levels;
        let base = games.clone();
        let exhaustive = exhaustive_level_fits(base.len(), budget);
        if exhaustive {
            for (left, right) in all_subset_pairs(&base) {
                let id = store
                    .intern(Side::Options(left), Side::Options(right))
                    .expect("kernel sides are interned games");
                if seen.insert(id) {
                    games.push(id);
                }
            }
        } else {
            sampled = true;
            games.extend(sample_kernel_level(store, &mut rng, &base, level, budget, &mut seen));
        }
    }
    Ok(Pool {
        universe: u.clone(),
        games,
        max_rank,
        adorn_pool: adorns.to_vec(),
        sampled,
    })
}

fn exhaustive_level_fits(k: usize, budget: usize) -> bool {
    if k >= 16 {
        return false;
    }
    let subsets = (1u64 << k) - 1;
    subsets * subsets <= budget as u64
}

fn all_subsets(base: &[GameId]) -> Vec<Vec<GameId>> {
    let mut subsets = Vec::new();
    for mask in 1..(1u64 << base.len()) {
        subsets.push(
            base.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &id)| id)
                .collect(),
        );
    }
    subsets
}

fn all_subset_pairs(base: &[GameId]) -> Vec<(Vec<GameId>, Vec<GameId>)> {
    let subsets = all_subsets(base);
    let mut pairs = Vec::new();
    for left in &subsets {
        for right in &subsets {
            pairs.push((left.clone(), right.clone()));
        }
    }
    pairs
}

fn random_subset(rng: &mut ChaCha8Rng, base: &[GameId]) -> Vec<GameId> {
    let cap = base.len().min(3);
    if cap == 0 {
        return Vec::new();
    }
    let size = rng.random_range(1..=cap);
    let mut picked = BTreeSet::new();
    while picked.len() < size {
        picked.insert(base[rng.random_range(0..base.len())]);
    }
    picked.into_iter().collect()
}

fn sample_kernel_level(
    store: &mut GameStore,
    rng: &mut ChaCha8Rng,
    base: &[GameId],
    level: u32,
    budget: usize,
    seen: &mut BTreeSet<GameId>,
) -> Vec<GameId> {
    let mut out = Vec::new();
    if base.is_empty() {
        return out;
    }
    let mut attempts = budget.saturating_mul(60) + 200;
    while out.len() < budget && attempts > 0 {
        attempts -= 1;
        let left = random_subset(rng, base);
        let right = random_subset(rng, base);
        let id = store
            .intern(Side::Options(left), Side::Options(right))
            .expect("kernel sides are interned games");
        if store.rank(id) == level && seen.insert(id) {
            out.push(id);
        }
    }
    out
}

/// Exhaustive free-space pool (atomic sides allowed), filtered to members.
pub fn free_pool(
    store: &mut GameStore,
    eval: &mut Evaluator,
    u: &Universe,
    max_rank: u32,
    adorns: &[Adorn],
) -> Result<Pool, EngineError> {
    let mut seen = BTreeSet::new();
    let mut games = Vec::new();
    for a in adorns {
        for b in adorns {
            let id = store.pura(a.clone(), b.clone());
            if eval.member(store, id, u) && seen.insert(id) {
                games.push(id);
            }
        }
    }
    for _ in 1..=max_rank {
        let base = games.clone();
        let k = base.len();
        let side_count = if k >= 64 {
            u128::MAX
        } else {
            (1u128 << k) - 1 + adorns.len() as u128
        };
        let candidates = side_count.saturating_mul(side_count);
        if candidates > universe::ENUMERATION_GUARD as u128 {
            return Err(EngineError::EnumerationTooLarge {
                count: candidates,
                guard: universe::ENUMERATION_GUARD,
            });
        }
        let mut sides: Vec<Side> = adorns.iter().map(|a| Side::Atom(a.clone())).collect();
        for subset in all_subsets(&base) {
            sides.push(Side::Options(subset));
        }
        let mut fresh = Vec::new();
        for ls in &sides {
            for rs in &sides {
                let id = store.intern(ls.clone(), rs.clone()).expect("sides are valid");
                if !seen.contains(&id) && eval.member(store, id, u) {
                    seen.insert(id);
                    fresh.push(id);
                }
            }
        }
        games.extend(fresh);
    }
    Ok(Pool {
        universe: u.clone(),
        games,
        max_rank,
        adorn_pool: adorns.to_vec(),
        sampled: false,
    })
}

/// Seeded free-space sample with membership filtering.
pub fn sampled_free_pool(
    store: &mut GameStore,
    eval: &mut Evaluator,
    u: &Universe,
    max_rank: u32,
    adorns: &[Adorn],
    seed: u64,
    target: usize,
) -> Result<Pool, EngineError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut games = Vec::new();
    for a in adorns {
        for b in adorns {
            let id = store.pura(a.clone(), b.clone());
            if eval.member(store, id, u) && seen.insert(id) {
                games.push(id);
            }
        }
    }
    for level in 1..=max_rank {
        let remaining_levels = (max_rank - level + 1) as usize;
        let budget = target.saturating_sub(games.len()) / remaining_levels;
        let base = games.clone();
        if base.is_empty() {
            break;
        }
        let mut attempts = budget.saturating_mul(60) + 200;
        let mut fresh = Vec::new();
        while fresh.len() < budget && attempts > 0 {
            attempts -= 1;
            let side = |rng: &mut ChaCha8Rng| -> Side {
                if rng.random_range(0..4) == 0 {
                    Side::Atom(adorns[rng.random_range(0..adorns.len())].clone())
                } else {
                    Side::Options(random_subset(rng, &base))
                }
            };
            let (ls, rs) = (side(&mut rng), side(&mut rng));
            if ls.is_atom() && rs.is_atom() {
                continue;
            }
            let id = store.intern(ls, rs).expect("sides are valid");
            if store.rank(id) == level && !seen.contains(&id) && eval.member(store, id, u) {
                seen.insert(id);
                fresh.push(id);
            }
        }
        games.extend(fresh);
    }
    Ok(Pool {
        universe: u.clone(),
        games,
        max_rank,
        adorn_pool: adorns.to_vec(),
        sampled: true,
    })
}

/// Extends a pool by one seeded batch of games one rank higher.
pub fn sampled_rank_extension(
    store: &mut GameStore,
    eval: &mut Evaluator,
    pool: &Pool,
    seed: u64,
    count: usize,
) -> Pool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<GameId> = pool.games.iter().copied().collect();
    let level = pool.max_rank + 1;
    let mut games = pool.games.clone();
    let mut attempts = count.saturating_mul(60) + 200;
    let mut added = 0;
    while added < count && attempts > 0 && !pool.games.is_empty() {
        attempts -= 1;
        let left = random_subset(&mut rng, &pool.games);
        let right = random_subset(&mut rng, &pool.games);
        let id = store
            .intern(Side::Options(left), Side::Options(right))
            .expect("pool games are interned");
        if store.rank(id) == level && !seen.contains(&id) && eval.member(store, id, &pool.universe)
        {
            seen.insert(id);
            games.push(id);
            added += 1;
        }
    }
    Pool {
        universe: pool.universe.clone(),
        games,
        max_rank: level,
        adorn_pool: pool.adorn_pool.clone(),
        sampled: true,
    }
}

/// The impartial zero-adorn games of rank at most two.
pub fn impartial_pool(store: &mut GameStore, u: &Universe) -> Pool {
    let zero = store.zero();
    let star = store.star();
    let star_of_star = store
        .intern(Side::Options(vec![star]), Side::Options(vec![star]))
        .expect("sides are interned");
    let star_two = store
        .intern(Side::Options(vec![zero, star]), Side::Options(vec![zero, star]))
        .expect("sides are interned");
    Pool {
        universe: u.clone(),
        games: vec![zero, star, star_of_star, star_two],
        max_rank: 2,
        adorn_pool: vec![Adorn::zero()],
        sampled: false,
    }
}

/// Checks the superordinate order `o(g+X) ≥ o(h+X)` over every pool witness.
pub fn ge_bruteforce(
    store: &mut GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    pool: &Pool,
) -> Result<BruteForce, EngineError> {
    for &x in &pool.games {
        let gx = store.sum(g, x);
        let hx = store.sum(h, x);
        let pg = eval.outcome_unchecked(store, gx, &pool.universe);
        let ph = eval.outcome_unchecked(store, hx, &pool.universe);
        if !pg.left.ge(&ph.left)? {
            return Ok(BruteForce::RefutedWithWitness {
                witness: x,
                side: Player::Left,
            });
        }
        if !pg.right.ge(&ph.right)? {
            return Ok(BruteForce::RefutedWithWitness {
                witness: x,
                side: Player::Right,
            });
        }
    }
    Ok(BruteForce::ConfirmedOnPool)
}

/// Searches the pool for a `T` with `o_L(g+T) < o_R(h+T)`.
pub fn find_linking_t(
    store: &mut GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    pool: &Pool,
) -> Result<Option<GameId>, EngineError> {
    for &t in &pool.games {
        let gt = store.sum(g, t);
        let ht = store.sum(h, t);
        let left = eval.outcome_unchecked(store, gt, &pool.universe).left;
        let right = eval.outcome_unchecked(store, ht, &pool.universe).right;
        if left.cmp_same(&right)? == std::cmp::Ordering::Less {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// The adjoint G° of a zero-adorn game; never atomic.
pub fn adjoint(store: &mut GameStore, g: GameId) -> Result<GameId, EngineError> {
    if !store.is_zero_adorned(g) {
        return Err(EngineError::NonZeroAdorn {
            op: "adjoint",
            game: g,
        });
    }
    let mut memo = HashMap::new();
    Ok(adjoint_rec(store, g, &mut memo))
}

fn adjoint_rec(store: &mut GameStore, g: GameId, memo: &mut HashMap<GameId, GameId>) -> GameId {
    if let Some(&a) = memo.get(&g) {
        return a;
    }
    let zero = store.zero();
    let left_opts = store.left_options(g).to_vec();
    let right_opts = store.right_options(g).to_vec();
    let co = |store: &mut GameStore, opts: Vec<GameId>, memo: &mut HashMap<GameId, GameId>| {
        opts.into_iter()
            .map(|o| adjoint_rec(store, o, memo))
            .collect::<Vec<_>>()
    };
    let (left, right) = match (left_opts.is_empty(), right_opts.is_empty()) {
        (true, true) => (vec![zero], vec![zero]),
        (true, false) => (co(store, right_opts, memo), vec![zero]),
        (false, true) => (vec![zero], co(store, left_opts, memo)),
        (false, false) => {
            let l = co(store, right_opts, memo);
            let r = co(store, left_opts, memo);
            (l, r)
        }
    };
    let id = store
        .intern(Side::Options(left), Side::Options(right))
        .expect("adjoint sides are interned");
    memo.insert(g, id);
    id
}

/// A game `H` with `outcome_class(g + H) = target` in a misère universe.
pub fn density_witness(
    store: &mut GameStore,
    g: GameId,
    target: OutcomeClass,
    u: &Universe,
) -> Result<GameId, EngineError> {
    if !u.is_misere() {
        return Err(EngineError::UnsupportedUniverse {
            op: "density_witness",
            universe: u.name().to_string(),
        });
    }
    let g_adj = adjoint(store, g)?;
    let witness = match target {
        OutcomeClass::P => g_adj,
        OutcomeClass::N => store
            .intern(Side::Options(vec![g_adj]), Side::Options(vec![g_adj]))
            .expect("sides are interned"),
        OutcomeClass::L => {
            let n = density_witness(store, g, OutcomeClass::N, u)?;
            let mut left = Vec::new();
            for gr in store.right_options(g).to_vec() {
                left.push(adjoint(store, gr)?);
            }
            left.push(g_adj);
            store
                .intern(Side::Options(left), Side::Options(vec![n]))
                .expect("sides are interned")
        }
        OutcomeClass::R => {
            let n = density_witness(store, g, OutcomeClass::N, u)?;
            let mut right = Vec::new();
            for gl in store.left_options(g).to_vec() {
                right.push(adjoint(store, gl)?);
            }
            right.push(g_adj);
            store
                .intern(Side::Options(vec![n]), Side::Options(right))
                .expect("sides are interned")
        }
    };
    Ok(witness)
}

fn score_adorn(v: &OutcomeValue) -> &Adorn {
    match v {
        OutcomeValue::Score(a) => a,
        OutcomeValue::WinLoss(_) => unreachable!("scoring universes evaluate to scores"),
    }
}

/// A member `H` with `o(g + H) = (ν(x), ν(y))` in a parental scoring universe.
///
/// `H` answers every move in the `g` component with the matching witness of
/// the position reached, and gives each player an exit score pinning their
/// result: `x − o_R(z)` for Left and `y − o_L(z)` for Right at position `z`.
pub fn scoring_density_witness(
    store: &mut GameStore,
    eval: &mut Evaluator,
    g: GameId,
    x: &Adorn,
    y: &Adorn,
    u: &Universe,
) -> Result<GameId, EngineError> {
    if !u.is_scoring() {
        return Err(EngineError::UnsupportedUniverse {
            op: "scoring_density_witness",
            universe: u.name().to_string(),
        });
    }
    if !eval.member(store, g, u) {
        return Err(EngineError::NotAMember {
            game: g,
            universe: u.name().to_string(),
        });
    }
    let mut memo = HashMap::new();
    Ok(pinner_rec(store, eval, g, x, y, u, &mut memo))
}

fn pinner_rec(
    store: &mut GameStore,
    eval: &mut Evaluator,
    z: GameId,
    x: &Adorn,
    y: &Adorn,
    u: &Universe,
    memo: &mut HashMap<GameId, GameId>,
) -> GameId {
    if let Some(&w) = memo.get(&z) {
        return w;
    }
    let o = eval.outcome_unchecked(store, z, u);
    let left_exit = x - score_adorn(&o.right);
    let right_exit = y - score_adorn(&o.left);
    let mut left = Vec::new();
    for zr in store.right_options(z).to_vec() {
        left.push(pinner_rec(store, eval, zr, x, y, u, memo));
    }
    left.push(store.score(left_exit));
    let mut right = Vec::new();
    for zl in store.left_options(z).to_vec() {
        right.push(pinner_rec(store, eval, zl, x, y, u, memo));
    }
    right.push(store.score(right_exit));
    let id = store
        .intern(Side::Options(left), Side::Options(right))
        .expect("witness sides are interned");
    memo.insert(z, id);
    id
}

/// Outcome-equality evidence that `x + x` behaves like `x` against a pool.
#[derive(Debug, Clone, Serialize)]
pub struct QuasiIdentityReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

/// Compares `o(x+x+y)` with `o(x+y)` for every pool game `y`.
pub fn quasi_identity_probe(
    store: &mut GameStore,
    eval: &mut Evaluator,
    x: GameId,
    pool: &Pool,
) -> Result<QuasiIdentityReport, EngineError> {
    if !store.is_zero_adorned(x) {
        return Err(EngineError::NonZeroAdorn {
            op: "quasi_identity_probe",
            game: x,
        });
    }
    let doubled = store.sum(x, x);
    let mut violations = Vec::new();
    for &y in &pool.games {
        let once = store.sum(x, y);
        let twice = store.sum(doubled, y);
        let po = eval.outcome_unchecked(store, once, &pool.universe);
        let pt = eval.outcome_unchecked(store, twice, &pool.universe);
        if po != pt {
            violations.push(y.to_string());
        }
    }
    Ok(QuasiIdentityReport {
        checked: pool.games.len(),
        violations,
    })
}

fn record(
    check: &str,
    u: &Universe,
    g: GameId,
    h: GameId,
    verdict: &str,
    witness: Option<GameId>,
    started: Instant,
) -> SweepRecord {
    SweepRecord {
        check: check.to_string(),
        universe: u.name().to_string(),
        lhs: g.to_string(),
        rhs: h.to_string(),
        verdict: verdict.to_string(),
        witness: witness.map(|w| w.to_string()),
        micros: started.elapsed().as_micros(),
    }
}

/// Wherever constructive `ge` holds on the pool, brute force must confirm.
pub fn soundness_sweep(
    store: &mut GameStore,
    eval: &mut Evaluator,
    pool: &Pool,
    witnesses: &Pool,
) -> Result<Vec<SweepRecord>, EngineError> {
    let mut records = Vec::new();
    for &g in &pool.games {
        for &h in &pool.games {
            if !compare::ge(store, eval, g, h, &pool.universe)?.holds {
                continue;
            }
            let started = Instant::now();
            let (verdict, witness) = match ge_bruteforce(store, eval, g, h, witnesses)? {
                BruteForce::ConfirmedOnPool => ("confirmed", None),
                BruteForce::RefutedWithWitness { witness, .. } => ("refuted", Some(witness)),
            };
            records.push(record("soundness", &pool.universe, g, h, verdict, witness, started));
        }
    }
    Ok(records)
}

/// Wherever constructive `ge` fails on the pool, search for a refutation.
pub fn refutation_sweep(
    store: &mut GameStore,
    eval: &mut Evaluator,
    pool: &Pool,
    witnesses: &Pool,
) -> Result<Vec<SweepRecord>, EngineError> {
    let mut records = Vec::new();
    for &g in &pool.games {
        for &h in &pool.games {
            if compare::ge(store, eval, g, h, &pool.universe)?.holds {
                continue;
            }
            let started = Instant::now();
            let (verdict, witness) = match ge_bruteforce(store, eval, g, h, witnesses)? {
                BruteForce::RefutedWithWitness { witness, .. } => ("refuted", Some(witness)),
                BruteForce::ConfirmedOnPool => ("exhausted", None),
            };
            records.push(record("refutation", &pool.universe, g, h, verdict, witness, started));
        }
    }
    Ok(records)
}

/// `ge` in the pool's universe must imply classic normal-play order of the
/// ξ-projections.
pub fn projection_sweep(
    store: &mut GameStore,
    eval: &mut Evaluator,
    pool: &Pool,
) -> Result<Vec<SweepRecord>, EngineError> {
    let mut records = Vec::new();
    for &g in &pool.games.clone() {
        for &h in &pool.games.clone() {
            if !compare::ge(store, eval, g, h, &pool.universe)?.holds {
                continue;
            }
            let started = Instant::now();
            let pg = compare::xi_project(store, g);
            let ph = compare::xi_project(store, h);
            let verdict = if compare::ge_normal_classic(store, eval, pg, ph)? {
                "preserved"
            } else {
                "violated"
            };
            records.push(record("projection", &pool.universe, g, h, verdict, None, started));
        }
    }
    Ok(records)
}

/// Cross-checks `linked` against a pool search for a linking companion:
/// `witnessed`/`exhausted` where linked holds, `consistent`/`violated` where
/// it does not.
pub fn linked_agreement_sweep(
    store: &mut GameStore,
    eval: &mut Evaluator,
    pool: &Pool,
    witnesses: &Pool,
) -> Result<Vec<SweepRecord>, EngineError> {
    let mut records = Vec::new();
    for &g in &pool.games {
        for &h in &pool.games {
            let started = Instant::now();
            let l = compare::linked(store, eval, g, h, &pool.universe)?;
            let t = find_linking_t(store, eval, g, h, witnesses)?;
            let verdict = match (l, &t) {
                (true, Some(_)) => "witnessed",
                (true, None) => "exhausted",
                (false, None) => "consistent",
                (false, Some(_)) => "violated",
            };
            records.push(record("linked", &pool.universe, g, h, verdict, t, started));
        }
    }
    Ok(records)
}

/// Classic normal-play order must agree with `ge` of the ζ-images in `u`
/// on a zero-adorn pool.
pub fn embedding_sweep(
    store: &mut GameStore,
    eval: &mut Evaluator,
    pool: &Pool,
    u: &Universe,
) -> Result<Vec<SweepRecord>, EngineError> {
    let mut records = Vec::new();
    for &g in &pool.games.clone() {
        for &h in &pool.games.clone() {
            let started = Instant::now();
            let classic = compare::ge_normal_classic(store, eval, g, h)?;
            let zg = compare::zeta_embed(store, eval, g, u)?;
            let zh = compare::zeta_embed(store, eval, h, u)?;
            let constructive = compare::ge(store, eval, zg, zh, u)?.holds;
            let verdict = if classic == constructive { "agrees" } else { "disagrees" };
            records.push(record("embedding", u, g, h, verdict, None, started));
        }
    }
    Ok(records)
}

/// Writes sweep records as one JSON object per line.
pub fn write_report(path: &Path, records: &[SweepRecord]) -> std::io::Result<()> {
    let mut file = std::fs::File::create(path)?;
    for r in records {
        let line = serde_json::to_string(r).expect("records serialize");
        writeln!(file, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcomes::outcome_class;

    fn setup() -> (GameStore, Evaluator) {
        (GameStore::new(), Evaluator::new())
    }

    #[test]
    fn adjoint_examples() {
        let (mut s, _) = setup();
        let zero = s.zero();
        let star = s.star();
        assert_eq!(adjoint(&mut s, zero).unwrap(), star);
        let star_adj = adjoint(&mut s, star).unwrap();
        let expected = s
            .intern(Side::Options(vec![star]), Side::Options(vec![star]))
            .unwrap();
        assert_eq!(star_adj, expected);

        let one = s.score(Adorn::integer(1));
        assert!(matches!(
            adjoint(&mut s, one),
            Err(EngineError::NonZeroAdorn { .. })
        ));
    }

    #[test]
    fn adjoint_sums_are_p_positions() {
        let (mut s, mut eval) = setup();
        let u = Universe::misere();
        let zero = s.zero();
        let star = s.star();
        let end = s.intern(Side::Options(vec![zero]), Side::Atom(Adorn::zero())).unwrap();
        for g in [zero, star, end] {
            let adj = adjoint(&mut s, g).unwrap();
            assert!(!s.is_left_atomic(adj) && !s.is_right_atomic(adj));
            let total = s.sum(g, adj);
            let pair = eval.outcome_unchecked(&s, total, &u);
            assert_eq!(outcome_class(&pair, &u).unwrap(), OutcomeClass::P);
        }
    }

    #[test]
    fn density_witnesses_hit_their_classes() {
        let (mut s, mut eval) = setup();
        let u = Universe::misere();
        let zero = s.zero();
        let star = s.star();
        for g in [zero, star] {
            for target in [OutcomeClass::L, OutcomeClass::R, OutcomeClass::N, OutcomeClass::P] {
                let w = density_witness(&mut s, g, target, &u).unwrap();
                let total = s.sum(g, w);
                let pair = eval.outcome_unchecked(&s, total, &u);
                assert_eq!(outcome_class(&pair, &u).unwrap(), target, "game {g} target {target}");
            }
        }
        assert_eq!(density_witness(&mut s, zero, OutcomeClass::P, &u).unwrap(), star);
        assert!(matches!(
            density_witness(&mut s, zero, OutcomeClass::P, &Universe::normal()),
            Err(EngineError::UnsupportedUniverse { .. })
        ));
    }

    #[test]
    fn scoring_witness_pins_both_scores() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_scoring();
        let zero = s.zero();
        let star = s.star();
        let one = s.score(Adorn::integer(1));
        let skew = s.intern(Side::Options(vec![one]), Side::Options(vec![zero])).unwrap();
        for g in [zero, star, skew] {
            for (x, y) in [(2i64, -1i64), (-1, 2), (-2, 2), (0, 0), (1, 1)] {
                let (x, y) = (Adorn::integer(x), Adorn::integer(y));
                let w = scoring_density_witness(&mut s, &mut eval, g, &x, &y, &u).unwrap();
                assert!(eval.member(&s, w, &u));
                let total = s.sum(g, w);
                let pair = eval.outcome_unchecked(&s, total, &u);
                assert_eq!(pair.left, OutcomeValue::Score(x.clone()));
                assert_eq!(pair.right, OutcomeValue::Score(y.clone()));
            }
        }

        // ⟨{2̂}|{−1̂}⟩ pins the zero game to (2, −1).
        let w = scoring_density_witness(
            &mut s,
            &mut eval,
            zero,
            &Adorn::integer(2),
            &Adorn::integer(-1),
            &u,
        )
        .unwrap();
        let two = s.score(Adorn::integer(2));
        let minus_one = s.score(Adorn::integer(-1));
        let expected = s
            .intern(Side::Options(vec![two]), Side::Options(vec![minus_one]))
            .unwrap();
        assert_eq!(w, expected);
    }

    #[test]
    fn scoring_witness_handles_one_sided_games() {
        let (mut s, mut eval) = setup();
        let u = Universe::guaranteed_scoring();
        let zero = s.zero();
        let end = s.intern(Side::Options(vec![zero]), Side::Atom(Adorn::zero())).unwrap();
        let (x, y) = (Adorn::integer(2), Adorn::integer(-1));
        let w = scoring_density_witness(&mut s, &mut eval, end, &x, &y, &u).unwrap();
        let total = s.sum(end, w);
        let pair = eval.outcome_unchecked(&s, total, &u);
        assert_eq!(pair.left, OutcomeValue::Score(x));
        assert_eq!(pair.right, OutcomeValue::Score(y));
    }

    #[test]
    fn bruteforce_confirms_and_refutes() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let pool = kernel_pool(&mut s, &u, 2, &[Adorn::zero()]).unwrap();
        let zero = s.zero();
        let star = s.star();
        let zero_bar_star = s
            .intern(Side::Options(vec![zero]), Side::Options(vec![star]))
            .unwrap();
        assert_eq!(
            ge_bruteforce(&mut s, &mut eval, zero, zero, &pool).unwrap(),
            BruteForce::ConfirmedOnPool
        );
        assert!(matches!(
            ge_bruteforce(&mut s, &mut eval, zero_bar_star, zero, &pool).unwrap(),
            BruteForce::RefutedWithWitness { .. }
        ));
    }

    #[test]
    fn linking_search_examples() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let pool = kernel_pool(&mut s, &u, 2, &[Adorn::zero()]).unwrap();
        let zero = s.zero();
        let star = s.star();
        let t = find_linking_t(&mut s, &mut eval, zero, zero, &pool).unwrap();
        assert!(t.is_some());
        // linked(*, 0̂) is false, so no pool game may witness a link.
        assert!(!compare::linked(&s, &mut eval, star, zero, &u).unwrap());
        assert_eq!(find_linking_t(&mut s, &mut eval, star, zero, &pool).unwrap(), None);
    }

    #[test]
    fn quasi_identity_probe_examples() {
        let (mut s, mut eval) = setup();
        let u = Universe::misere();
        let pool = impartial_pool(&mut s, &u);
        let zero = s.zero();
        let star = s.star();
        let star_two = s
            .intern(Side::Options(vec![zero, star]), Side::Options(vec![zero, star]))
            .unwrap();
        let x = s.sum(star_two, star_two);

        let report = quasi_identity_probe(&mut s, &mut eval, x, &pool).unwrap();
        assert_eq!(report.checked, 4);
        assert!(report.violations.is_empty());

        let trivial = quasi_identity_probe(&mut s, &mut eval, zero, &pool).unwrap();
        assert!(trivial.violations.is_empty());

        let star_report = quasi_identity_probe(&mut s, &mut eval, star, &pool).unwrap();
        assert!(!star_report.violations.is_empty());
    }

    #[test]
    fn pools_are_deterministic_and_member_only() {
        let adorns = [Adorn::integer(-1), Adorn::zero(), Adorn::integer(1)];
        let build = || {
            let (mut s, mut eval) = setup();
            let u = Universe::dicot_scoring();
            let pool = sampled_kernel_pool(&mut s, &u, 2, &adorns, 7, 40).unwrap();
            assert!(pool.sampled);
            for &g in &pool.games {
                assert!(eval.member(&s, g, &u));
                assert!(s.rank(g) <= 2);
            }
            pool.games.iter().map(|&g| s.notation(g)).collect::<Vec<_>>()
        };
        let first = build();
        assert_eq!(first, build());
        assert!(first.len() >= 30);
    }

    #[test]
    fn rank_extension_adds_higher_rank_members() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let base = kernel_pool(&mut s, &u, 2, &[Adorn::zero()]).unwrap();
        let extended = sampled_rank_extension(&mut s, &mut eval, &base, 11, 50);
        assert_eq!(extended.games.len(), base.games.len() + 50);
        for &g in &extended.games[base.games.len()..] {
            assert_eq!(s.rank(g), 3);
            assert!(eval.member(&s, g, &u));
        }
    }

    #[test]
    fn mini_sweeps_are_clean() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let pool = kernel_pool(&mut s, &u, 1, &[Adorn::zero()]).unwrap();
        let witnesses = kernel_pool(&mut s, &u, 2, &[Adorn::zero()]).unwrap();
        let sound = soundness_sweep(&mut s, &mut eval, &pool, &witnesses).unwrap();
        assert!(sound.iter().all(|r| r.verdict == "confirmed"));
        let refuted = refutation_sweep(&mut s, &mut eval, &pool, &witnesses).unwrap();
        assert!(refuted.iter().all(|r| r.verdict == "refuted"));

        let agree = linked_agreement_sweep(&mut s, &mut eval, &pool, &witnesses).unwrap();
        assert!(agree.iter().all(|r| r.verdict != "violated"));
        assert!(agree.iter().any(|r| r.verdict == "witnessed"));

        let free = free_pool(&mut s, &mut eval, &Universe::normal(), 1, &[Adorn::zero()]).unwrap();
        assert_eq!(free.games.len(), 4);
        let emb = embedding_sweep(&mut s, &mut eval, &free, &Universe::guaranteed_scoring()).unwrap();
        assert!(emb.iter().all(|r| r.verdict == "agrees"));
    }
}
