//! The constructive order: provisos, the Common Normal Part, and verdicts.

use crate::error::EngineError;
use crate::games::{GameId, GameStore};
use crate::outcomes::{Evaluator, OutcomeValue};
use crate::universe::{ProvisoKind, Universe};
use std::fmt;

/// Which player a trace entry refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Left,
    Right,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Left => "Left",
            Player::Right => "Right",
        })
    }
}

/// Which proviso inequality failed, with both sides' values where scored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProvisoFailure {
    LeftOutcome { lhs: OutcomeValue, rhs: OutcomeValue },
    RightOutcome { lhs: OutcomeValue, rhs: OutcomeValue },
    LeftEnd,
    RightEnd,
    PassLeft { lhs: OutcomeValue, rhs: OutcomeValue },
    PassRight { lhs: OutcomeValue, rhs: OutcomeValue },
}

impl fmt::Display for ProvisoFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProvisoFailure::LeftOutcome { lhs, rhs } => {
                write!(f, "left outcome {lhs} < {rhs}")
            }
            ProvisoFailure::RightOutcome { lhs, rhs } => {
                write!(f, "right outcome {lhs} < {rhs}")
            }
            ProvisoFailure::LeftEnd => write!(f, "right side is left-ended but left side is not"),
            ProvisoFailure::RightEnd => write!(f, "left side is right-ended but right side is not"),
            ProvisoFailure::PassLeft { lhs, rhs } => {
                write!(f, "pass-allowed left score {lhs} < {rhs}")
            }
            ProvisoFailure::PassRight { lhs, rhs } => {
                write!(f, "pass-allowed right score {lhs} < {rhs}")
            }
        }
    }
}

/// The first unanswerable move found while checking the Common Normal Part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnpFailure {
    pub mover: Player,
    pub option: GameId,
}

impl fmt::Display for CnpFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}'s move to {} is unanswered", self.mover, self.option)
    }
}

/// Why a verdict holds or fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeReason {
    Satisfied,
    Proviso(ProvisoFailure),
    Cnp(CnpFailure),
}

/// Result of a constructive comparison, with a failure trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub reason: GeReason,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            holds: true,
            reason: GeReason::Satisfied,
        }
    }

    fn fail(reason: GeReason) -> Self {
        Verdict {
            holds: false,
            reason,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            GeReason::Satisfied => write!(f, "holds"),
            GeReason::Proviso(p) => write!(f, "fails the proviso: {p}"),
            GeReason::Cnp(c) => write!(f, "fails the common normal part: {c}"),
        }
    }
}

fn require_constructive(u: &Universe) -> Result<(), EngineError> {
    if u.proviso() == ProvisoKind::OracleOnly {
        return Err(EngineError::ConstructiveUnavailable {
            universe: u.name().to_string(),
        });
    }
    Ok(())
}

fn require_members(
    store: &GameStore,
    eval: &mut Evaluator,
    games: [GameId; 2],
    u: &Universe,
) -> Result<(), EngineError> {
    for g in games {
        if !eval.member(store, g, u) {
            return Err(EngineError::NotAMember {
                game: g,
                universe: u.name().to_string(),
            });
        }
    }
    Ok(())
}

/// Decides `g ≽ h` in `u` constructively, with a failure trace.
pub fn ge(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    u: &Universe,
) -> Result<Verdict, EngineError> {
    require_constructive(u)?;
    require_members(store, eval, [g, h], u)?;
    ge_rec(store, eval, g, h, u)
}

fn ge_rec(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    u: &Universe,
) -> Result<Verdict, EngineError> {
    if let Some(v) = eval.cache_mut(u.name()).verdict.get(&(g, h)) {
        return Ok(v.clone());
    }
    let verdict = match proviso_check(store, eval, g, h, u)? {
        Some(failure) => Verdict::fail(GeReason::Proviso(failure)),
        None => cnp_check(store, eval, g, h, u)?,
    };
    eval.cache_mut(u.name())
        .verdict
        .insert((g, h), verdict.clone());
    Ok(verdict)
}

fn proviso_check(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    u: &Universe,
) -> Result<Option<ProvisoFailure>, EngineError> {
    match u.proviso() {
        ProvisoKind::NormalEmpty => Ok(None),
        ProvisoKind::DicotOutcomes => {
            let pg = eval.outcome_unchecked(store, g, u);
            let ph = eval.outcome_unchecked(store, h, u);
            if !pg.left.ge(&ph.left)? {
                return Ok(Some(ProvisoFailure::LeftOutcome {
                    lhs: pg.left,
                    rhs: ph.left,
                }));
            }
            if !pg.right.ge(&ph.right)? {
                return Ok(Some(ProvisoFailure::RightOutcome {
                    lhs: pg.right,
                    rhs: ph.right,
                }));
            }
            Ok(None)
        }
        ProvisoKind::FreeMisereAtomic => {
            if store.is_left_atomic(h) && !store.is_left_atomic(g) {
                return Ok(Some(ProvisoFailure::LeftEnd));
            }
            if store.is_right_atomic(g) && !store.is_right_atomic(h) {
                return Ok(Some(ProvisoFailure::RightEnd));
            }
            Ok(None)
        }
        ProvisoKind::GuaranteedPassAllowed => {
            let g_left = eval.pass_left_rec(store, g, u);
            let h_left = eval.pass_left_rec(store, h, u);
            if !g_left.ge(&h_left)? {
                return Ok(Some(ProvisoFailure::PassLeft {
                    lhs: g_left,
                    rhs: h_left,
                }));
            }
            let g_right = eval.pass_right_rec(store, g, u);
            let h_right = eval.pass_right_rec(store, h, u);
            if !g_right.ge(&h_right)? {
                return Ok(Some(ProvisoFailure::PassRight {
                    lhs: g_right,
                    rhs: h_right,
                }));
            }
            Ok(None)
        }
        ProvisoKind::OracleOnly => Err(EngineError::ConstructiveUnavailable {
            universe: u.name().to_string(),
        }),
    }
}

fn cnp_check(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    u: &Universe,
) -> Result<Verdict, EngineError> {
    for &gr in store.right_options(g) {
        if !right_move_answered(store, eval, gr, h, u)? {
            return Ok(Verdict::fail(GeReason::Cnp(CnpFailure {
                mover: Player::Right,
                option: gr,
            })));
        }
    }
    for &hl in store.left_options(h) {
        if !left_move_answered(store, eval, g, hl, u)? {
            return Ok(Verdict::fail(GeReason::Cnp(CnpFailure {
                mover: Player::Left,
                option: hl,
            })));
        }
    }
    Ok(Verdict::ok())
}

/// Right moved `g` to `gr`: some `h^R` keeps the order, or some `gr^L` restores it.
fn right_move_answered(
    store: &GameStore,
    eval: &mut Evaluator,
    gr: GameId,
    h: GameId,
    u: &Universe,
) -> Result<bool, EngineError> {
    for &hr in store.right_options(h) {
        if ge_rec(store, eval, gr, hr, u)?.holds {
            return Ok(true);
        }
    }
    for &grl in store.left_options(gr) {
        if ge_rec(store, eval, grl, h, u)?.holds {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Left moved `h` to `hl`: some `g^L` keeps the order, or some `hl^R` restores it.
fn left_move_answered(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    hl: GameId,
    u: &Universe,
) -> Result<bool, EngineError> {
    for &gl in store.left_options(g) {
        if ge_rec(store, eval, gl, hl, u)?.holds {
            return Ok(true);
        }
    }
    for &hlr in store.right_options(hl) {
        if ge_rec(store, eval, g, hlr, u)?.holds {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `g` is linked to `h`: no `g^L` is at least `h`, and `g` is at
/// least no `h^R`.
pub fn linked(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    u: &Universe,
) -> Result<bool, EngineError> {
    require_constructive(u)?;
    require_members(store, eval, [g, h], u)?;
    if let Some(&b) = eval.cache_mut(u.name()).linked.get(&(g, h)) {
        return Ok(b);
    }
    let mut result = true;
    for &gl in store.left_options(g) {
        if ge_rec(store, eval, gl, h, u)?.holds {
            result = false;
            break;
        }
    }
    if result {
        for &hr in store.right_options(h) {
            if ge_rec(store, eval, g, hr, u)?.holds {
                result = false;
                break;
            }
        }
    }
    eval.cache_mut(u.name()).linked.insert((g, h), result);
    Ok(result)
}

/// Whether `g` and `h` compare both ways.
pub fn equivalent(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    u: &Universe,
) -> Result<bool, EngineError> {
    Ok(ge(store, eval, g, h, u)?.holds && ge(store, eval, h, g, u)?.holds)
}

/// Whether `g` and `h` compare neither way.
pub fn incomparable(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
    u: &Universe,
) -> Result<bool, EngineError> {
    Ok(!ge(store, eval, g, h, u)?.holds && !ge(store, eval, h, g, u)?.holds)
}

/// The normal-play projection ξ: every adorn replaced by zero.
pub fn xi_project(store: &mut GameStore, g: GameId) -> GameId {
    store.project_zero(g)
}

/// The normal-play embedding ζ: a zero-adorn game read inside `u`.
pub fn zeta_embed(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    u: &Universe,
) -> Result<GameId, EngineError> {
    if !store.is_zero_adorned(g) {
        return Err(EngineError::NonZeroAdorn {
            op: "zeta_embed",
            game: g,
        });
    }
    if !eval.member(store, g, u) {
        return Err(EngineError::NotAMember {
            game: g,
            universe: u.name().to_string(),
        });
    }
    Ok(g)
}

/// The ζ-image of a normal-play integer: a chain of `|n|` blocked moves.
pub fn int_game(store: &mut GameStore, n: i64) -> GameId {
    let mut g = store.zero();
    for _ in 0..n.unsigned_abs() {
        let side = crate::games::Side::Options(vec![g]);
        g = if n > 0 {
            store.intern(side, crate::games::Side::Atom(crate::adorn::Adorn::zero()))
        } else {
            store.intern(crate::games::Side::Atom(crate::adorn::Adorn::zero()), side)
        }
        .expect("integer chains intern");
    }
    g
}

/// Classic normal-play test: Left wins moving second in `g − h`.
pub fn ge_normal_classic(
    store: &mut GameStore,
    eval: &mut Evaluator,
    g: GameId,
    h: GameId,
) -> Result<bool, EngineError> {
    for x in [g, h] {
        if !store.is_zero_adorned(x) {
            return Err(EngineError::NonZeroAdorn {
                op: "ge_normal_classic",
                game: x,
            });
        }
    }
    let conj = store.conjugate(h);
    let diff = store.sum(g, conj);
    let normal = Universe::normal();
    let pair = eval.outcome_unchecked(store, diff, &normal);
    Ok(pair.right == OutcomeValue::WinLoss(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adorn::Adorn;
    use crate::games::Side;

    fn setup() -> (GameStore, Evaluator) {
        (GameStore::new(), Evaluator::new())
    }

    #[test]
    fn dicot_misere_examples() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let zero = s.zero();
        let star = s.star();
        let zero_star_star = s
            .intern(Side::Options(vec![zero, star]), Side::Options(vec![star]))
            .unwrap();
        let zero_bar_star = s
            .intern(Side::Options(vec![zero]), Side::Options(vec![star]))
            .unwrap();

        assert!(ge(&s, &mut eval, zero_star_star, zero, &u).unwrap().holds);
        assert!(incomparable(&s, &mut eval, zero_bar_star, zero, &u).unwrap());
        assert!(ge_normal_classic(&mut s, &mut eval, zero_bar_star, zero).unwrap());
        assert!(ge(&s, &mut eval, zero_bar_star, zero, &Universe::normal()).unwrap().holds);

        for g in [zero, star, zero_star_star, zero_bar_star] {
            assert!(ge(&s, &mut eval, g, g, &u).unwrap().holds);
        }
    }

    #[test]
    fn guaranteed_examples() {
        let (mut s, mut eval) = setup();
        let u = Universe::guaranteed_scoring();
        let zero = s.zero();
        let one = s.score(Adorn::integer(1));
        let two = s.score(Adorn::integer(2));

        let inner = s.intern(Side::Options(vec![one]), Side::Options(vec![zero])).unwrap();
        let g = s.intern(Side::Options(vec![one]), Side::Options(vec![inner])).unwrap();
        assert!(ge(&s, &mut eval, g, one, &u).unwrap().holds);

        let h = s.intern(Side::Options(vec![one]), Side::Options(vec![two])).unwrap();
        let v = ge(&s, &mut eval, h, one, &u).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.reason,
            GeReason::Cnp(CnpFailure { mover: Player::Right, option: two })
        );

        let l = s.intern(Side::Options(vec![zero]), Side::Options(vec![two])).unwrap();
        let k = s.intern(Side::Options(vec![l]), Side::Options(vec![inner])).unwrap();
        let v = ge(&s, &mut eval, k, one, &u).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.reason,
            GeReason::Proviso(ProvisoFailure::PassLeft {
                lhs: OutcomeValue::Score(Adorn::zero()),
                rhs: OutcomeValue::Score(Adorn::integer(1)),
            })
        );
    }

    #[test]
    fn linked_examples() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let zero = s.zero();
        let star = s.star();
        assert!(linked(&s, &mut eval, zero, zero, &u).unwrap());
        assert!(!linked(&s, &mut eval, star, zero, &u).unwrap());
    }

    #[test]
    fn sum_with_zero_is_equivalent() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let zero = s.zero();
        let star = s.star();
        let deep = s
            .intern(Side::Options(vec![zero, star]), Side::Options(vec![star]))
            .unwrap();
        for g in [zero, star, deep] {
            let sum = s.sum(g, zero);
            assert!(equivalent(&s, &mut eval, sum, g, &u).unwrap());
        }
    }

    #[test]
    fn projection_and_embedding() {
        let (mut s, mut eval) = setup();
        let five = s.score(Adorn::integer(5));
        let zero = s.zero();
        assert_eq!(xi_project(&mut s, five), zero);
        assert_eq!(xi_project(&mut s, zero), zero);

        let u = Universe::guaranteed_scoring();
        assert_eq!(zeta_embed(&s, &mut eval, zero, &u).unwrap(), zero);
        assert!(matches!(
            zeta_embed(&s, &mut eval, five, &u),
            Err(EngineError::NonZeroAdorn { .. })
        ));

        let two = int_game(&mut s, 2);
        assert_eq!(s.rank(two), 2);
        assert!(s.is_right_atomic(two));
        let minus_one = int_game(&mut s, -1);
        assert_eq!(s.conjugate(minus_one), int_game(&mut s, 1));
        assert!(eval.member(&s, two, &u));
    }

    #[test]
    fn classic_normal_play_agreement() {
        let (mut s, mut eval) = setup();
        let zero = s.zero();
        let star = s.star();
        let up = s.intern(Side::Options(vec![zero]), Side::Options(vec![star])).unwrap();
        assert!(ge_normal_classic(&mut s, &mut eval, up, zero).unwrap());
        assert!(ge_normal_classic(&mut s, &mut eval, zero, zero).unwrap());
        assert!(!ge_normal_classic(&mut s, &mut eval, star, zero).unwrap());

        let u = Universe::normal();
        assert!(ge(&s, &mut eval, up, zero, &u).unwrap().holds);
        assert!(!ge(&s, &mut eval, star, zero, &u).unwrap().holds);

        let noisy = s.score(Adorn::integer(1));
        assert!(matches!(
            ge_normal_classic(&mut s, &mut eval, noisy, zero),
            Err(EngineError::NonZeroAdorn { .. })
        ));
    }

    #[test]
    fn free_scoring_is_oracle_only() {
        let (mut s, mut eval) = setup();
        let zero = s.zero();
        let u = Universe::free_scoring();
        assert!(matches!(
            ge(&s, &mut eval, zero, zero, &u),
            Err(EngineError::ConstructiveUnavailable { .. })
        ));
    }
}
