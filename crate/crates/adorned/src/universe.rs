//! Universe descriptors: adorn domains, valuations, membership, and extensions.

use crate::adorn::Adorn;
use crate::error::EngineError;
use crate::games::{GameId, GameStore, Side};
use crate::outcomes::{Evaluator, OutcomeValue};
use std::collections::BTreeSet;

/// Ceiling on exhaustive enumeration candidates per level.
pub const ENUMERATION_GUARD: usize = 100_000;

/// The set of adorns a universe's games may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdornDomain {
    ZeroOnly,
    AllRationals,
}

impl AdornDomain {
    #[inline]
    pub fn contains(&self, a: &Adorn) -> bool {
        match self {
            AdornDomain::ZeroOnly => a.is_zero(),
            AdornDomain::AllRationals => true,
        }
    }
}

/// How ending adorns map into the universe's outcome set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    NormalPlay,
    MiserePlay,
    Scoring,
}

impl Valuation {
    /// ν_L: the outcome when Left faces an ending adorn.
    pub fn nu_left(&self, a: &Adorn) -> OutcomeValue {
        match self {
            Valuation::NormalPlay => OutcomeValue::WinLoss(-1),
            Valuation::MiserePlay => OutcomeValue::WinLoss(1),
            Valuation::Scoring => OutcomeValue::Score(a.clone()),
        }
    }

    /// ν_R: the outcome when Right faces an ending adorn.
    pub fn nu_right(&self, a: &Adorn) -> OutcomeValue {
        match self {
            Valuation::NormalPlay => OutcomeValue::WinLoss(1),
            Valuation::MiserePlay => OutcomeValue::WinLoss(-1),
            Valuation::Scoring => OutcomeValue::Score(a.clone()),
        }
    }

    #[inline]
    pub fn is_scoring(self) -> bool {
        matches!(self, Valuation::Scoring)
    }
}

/// Which side condition accompanies the Common Normal Part in `ge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProvisoKind {
    NormalEmpty,
    DicotOutcomes,
    FreeMisereAtomic,
    GuaranteedPassAllowed,
    OracleOnly,
}

#[derive(Debug, Clone)]
enum MembershipRule {
    FreeSpace,
    DicotKernel,
    HorrorVacui,
    Extension {
        base: Box<Universe>,
        closure: BTreeSet<GameId>,
    },
}

/// A universe of games: adorn domain, valuation, membership, and proviso.
#[derive(Debug, Clone)]
pub struct Universe {
    name: String,
    domain: AdornDomain,
    valuation: Valuation,
    proviso: ProvisoKind,
    rule: MembershipRule,
}

impl Universe {
    fn built_in(
        name: &str,
        domain: AdornDomain,
        valuation: Valuation,
        proviso: ProvisoKind,
        rule: MembershipRule,
    ) -> Self {
        Universe {
            name: name.to_string(),
            domain,
            valuation,
            proviso,
            rule,
        }
    }

    /// Normal play: zero adorns, last player to move wins.
    pub fn normal() -> Self {
        Self::built_in(
            "normal",
            AdornDomain::ZeroOnly,
            Valuation::NormalPlay,
            ProvisoKind::NormalEmpty,
            MembershipRule::FreeSpace,
        )
    }

    /// Misère play over the free space of zero-adorn games.
    pub fn misere() -> Self {
        Self::built_in(
            "misere",
            AdornDomain::ZeroOnly,
            Valuation::MiserePlay,
            ProvisoKind::FreeMisereAtomic,
            MembershipRule::FreeSpace,
        )
    }

    /// The free misère space; same games and order as [`Universe::misere`].
    pub fn free_misere() -> Self {
        Self::built_in(
            "free-misere",
            AdornDomain::ZeroOnly,
            Valuation::MiserePlay,
            ProvisoKind::FreeMisereAtomic,
            MembershipRule::FreeSpace,
        )
    }

    /// Misère play restricted to the dicot kernel.
    pub fn dicot_misere() -> Self {
        Self::built_in(
            "dicot-misere",
            AdornDomain::ZeroOnly,
            Valuation::MiserePlay,
            ProvisoKind::DicotOutcomes,
            MembershipRule::DicotKernel,
        )
    }

    /// Scoring play restricted to the dicot kernel.
    pub fn dicot_scoring() -> Self {
        Self::built_in(
            "dicot-scoring",
            AdornDomain::AllRationals,
            Valuation::Scoring,
            ProvisoKind::DicotOutcomes,
            MembershipRule::DicotKernel,
        )
    }

    /// Guaranteed scoring play: the horror vacui members of the free space.
    pub fn guaranteed_scoring() -> Self {
        Self::built_in(
            "guaranteed",
            AdornDomain::AllRationals,
            Valuation::Scoring,
            ProvisoKind::GuaranteedPassAllowed,
            MembershipRule::HorrorVacui,
        )
    }

    /// The free scoring space; comparison only through the oracle.
    pub fn free_scoring() -> Self {
        Self::built_in(
            "free-scoring",
            AdornDomain::AllRationals,
            Valuation::Scoring,
            ProvisoKind::OracleOnly,
            MembershipRule::FreeSpace,
        )
    }

    /// All built-in universes.
    pub fn builtins() -> Vec<Universe> {
        vec![
            Universe::normal(),
            Universe::misere(),
            Universe::dicot_misere(),
            Universe::free_misere(),
            Universe::dicot_scoring(),
            Universe::guaranteed_scoring(),
            Universe::free_scoring(),
        ]
    }

    /// Looks a built-in universe up by its surface name.
    pub fn by_name(name: &str) -> Option<Universe> {
        Universe::builtins().into_iter().find(|u| u.name == name)
    }

    #[inline]
    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn domain(&self) -> AdornDomain {
        self.domain
    }

    #[inline]
    pub fn valuation(&self) -> Valuation {
        self.valuation
    }

    #[inline]
    pub fn proviso(&self) -> ProvisoKind {
        self.proviso
    }

    #[inline]
    pub fn is_scoring(&self) -> bool {
        self.valuation.is_scoring()
    }

    #[inline]
    pub fn is_misere(&self) -> bool {
        self.valuation == Valuation::MiserePlay
    }

    /// Extension membership changes as sums are registered, so only
    /// built-in verdicts may be memoized.
    pub(crate) fn cacheable_membership(&self) -> bool {
        !matches!(self.rule, MembershipRule::Extension { .. })
    }

    /// Extends this universe by one-side-atomic generators.
    ///
    /// Membership of the result accepts the base universe, the generators
    /// with their followers and conjugates, registered sums, and anything
    /// parental over members. Sum closure is tracked only for explicitly
    /// registered games, so the predicate is sound but not complete.
    pub fn extend(
        &self,
        store: &mut GameStore,
        generators: &[GameId],
    ) -> Result<Universe, EngineError> {
        let mut closure = BTreeSet::new();
        for &g in generators {
            if store.is_left_atomic(g) == store.is_right_atomic(g) {
                return Err(EngineError::GeneratorNotOneSideAtomic { game: g });
            }
            for f in store.followers(g) {
                for side in [&store.node(f).left, &store.node(f).right] {
                    if let Some(a) = side.atom()
                        && !self.domain.contains(a)
                    {
                        return Err(EngineError::AdornOutsideDomain {
                            adorn: a.to_string(),
                            universe: self.name.clone(),
                        });
                    }
                }
            }
            closure.extend(store.followers(g));
            let conj = store.conjugate(g);
            closure.extend(store.followers(conj));
        }
        let tags: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
        Ok(Universe {
            name: format!("{}+gen[{}]", self.name, tags.join(",")),
            domain: self.domain,
            valuation: self.valuation,
            proviso: ProvisoKind::OracleOnly,
            rule: MembershipRule::Extension {
                base: Box::new(self.clone()),
                closure,
            },
        })
    }

    /// Records a game constructed as a sum of members of this extension.
    pub fn register_sum_member(&mut self, store: &GameStore, g: GameId) {
        if let MembershipRule::Extension { closure, .. } = &mut self.rule {
            closure.extend(store.followers(g));
        }
    }
}

/// Whether every adorn reachable in `g` lies in the domain.
fn adorns_in_domain(store: &GameStore, g: GameId, domain: AdornDomain) -> bool {
    store.followers(g).into_iter().all(|f| {
        let node = store.node(f);
        [&node.left, &node.right]
            .into_iter()
            .filter_map(Side::atom)
            .all(|a| domain.contains(a))
    })
}

/// Whether every follower is a score or has options on both sides.
pub fn is_dicot_kernel(store: &GameStore, g: GameId) -> bool {
    store.followers(g).into_iter().all(|f| {
        let node = store.node(f);
        match (&node.left, &node.right) {
            (Side::Atom(a), Side::Atom(b)) => a == b,
            (Side::Options(_), Side::Options(_)) => true,
            _ => false,
        }
    })
}

/// Whether every one-side-atomic follower prefers passing to ending:
/// `o_L(⟨X^L|∅^a⟩) ≤ ν_R(a)` and `ν_L(a) ≤ o_R(⟨∅^a|X^R⟩)`.
pub fn is_horror_vacui(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    u: &Universe,
) -> Result<bool, EngineError> {
    if !u.is_scoring() {
        return Err(EngineError::UnsupportedUniverse {
            op: "is_horror_vacui",
            universe: u.name().to_string(),
        });
    }
    Ok(horror_vacui_holds(store, eval, g, u))
}

fn horror_vacui_holds(store: &GameStore, eval: &mut Evaluator, g: GameId, u: &Universe) -> bool {
    let same = |a: &OutcomeValue, b: &OutcomeValue| {
        a.cmp_same(b).expect("one universe yields one value set")
    };
    store.followers(g).into_iter().all(|f| {
        if let Some(a) = store.node(f).right.atom() {
            let bound = u.valuation().nu_right(a);
            let o_l = eval.outcome_unchecked(store, f, u).left;
            if same(&o_l, &bound) == std::cmp::Ordering::Greater {
                return false;
            }
        }
        if let Some(a) = store.node(f).left.atom() {
            let bound = u.valuation().nu_left(a);
            let o_r = eval.outcome_unchecked(store, f, u).right;
            if same(&bound, &o_r) == std::cmp::Ordering::Greater {
                return false;
            }
        }
        true
    })
}

/// The uncached membership predicate behind [`Evaluator::member`].
pub(crate) fn member_impl(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    u: &Universe,
) -> bool {
    if !adorns_in_domain(store, g, u.domain) {
        return false;
    }
    match &u.rule {
        MembershipRule::FreeSpace => true,
        MembershipRule::DicotKernel => is_dicot_kernel(store, g),
        MembershipRule::HorrorVacui => horror_vacui_holds(store, eval, g, u),
        MembershipRule::Extension { base, closure } => ext_member(store, eval, g, base, closure),
    }
}

fn ext_member(
    store: &GameStore,
    eval: &mut Evaluator,
    g: GameId,
    base: &Universe,
    closure: &BTreeSet<GameId>,
) -> bool {
    if closure.contains(&g) || eval.member(store, g, base) {
        return true;
    }
    let node = store.node(g);
    if node.left.is_atom() || node.right.is_atom() {
        return false;
    }
    node.left
        .options()
        .iter()
        .chain(node.right.options())
        .all(|&o| ext_member(store, eval, o, base, closure))
}

/// Enumerates the kernel over `adorn_pool` up to `max_rank`: scores at
/// level zero, then every game with both sides non-empty subsets of the
/// games built so far.
pub fn enumerate_kernel(
    store: &mut GameStore,
    u: &Universe,
    max_rank: u32,
    adorn_pool: &[Adorn],
) -> Result<Vec<GameId>, EngineError> {
    for a in adorn_pool {
        if !u.domain.contains(a) {
            return Err(EngineError::AdornOutsideDomain {
                adorn: a.to_string(),
                universe: u.name.clone(),
            });
        }
    }
    let mut seen = BTreeSet::new();
    let mut all = Vec::new();
    for a in adorn_pool {
        let id = store.score(a.clone());
        if seen.insert(id) {
            all.push(id);
        }
    }
    for _ in 0..max_rank {
        let base = all.clone();
        let k = base.len();
        let subsets = if k >= 64 {
            u128::MAX
        } else {
            (1u128 << k) - 1
        };
        let count = subsets.saturating_mul(subsets);
        if count > ENUMERATION_GUARD as u128 {
            return Err(EngineError::EnumerationTooLarge {
                count,
                guard: ENUMERATION_GUARD,
            });
        }
        let pick = |mask: u64| -> Vec<GameId> {
            base.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &id)| id)
                .collect()
        };
        for left_mask in 1..(1u64 << k) {
            for right_mask in 1..(1u64 << k) {
                let id = store
                    .intern(Side::Options(pick(left_mask)), Side::Options(pick(right_mask)))
                    .expect("kernel sides are interned games");
                if seen.insert(id) {
                    all.push(id);
                }
            }
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (GameStore, Evaluator) {
        (GameStore::new(), Evaluator::new())
    }

    #[test]
    fn built_in_names_round_trip() {
        for u in Universe::builtins() {
            let again = Universe::by_name(u.name()).unwrap();
            assert_eq!(again.name(), u.name());
            assert_eq!(again.proviso(), u.proviso());
        }
        assert!(Universe::by_name("nonsense").is_none());
    }

    #[test]
    fn kernel_shape_examples() {
        let (mut s, _) = setup();
        let zero = s.zero();
        assert!(is_dicot_kernel(&s, zero));
        let unequal = s.pura(Adorn::integer(1), Adorn::integer(2));
        assert!(!is_dicot_kernel(&s, unequal));
        let end = s.intern(Side::Options(vec![zero]), Side::Atom(Adorn::zero())).unwrap();
        assert!(!is_dicot_kernel(&s, end));
    }

    #[test]
    fn membership_examples() {
        let (mut s, mut eval) = setup();
        let dicot = Universe::dicot_misere();
        let misere = Universe::misere();
        let star = s.star();
        assert!(eval.member(&s, star, &dicot));
        let zero = s.zero();
        let end = s.intern(Side::Options(vec![zero]), Side::Atom(Adorn::zero())).unwrap();
        assert!(!eval.member(&s, end, &dicot));
        assert!(eval.member(&s, end, &misere));
        let three = s.score(Adorn::integer(3));
        assert!(!eval.member(&s, three, &dicot));
        assert!(eval.member(&s, three, &Universe::dicot_scoring()));
    }

    #[test]
    fn horror_vacui_examples() {
        let (mut s, mut eval) = setup();
        let u = Universe::guaranteed_scoring();
        for n in [-2, 0, 5] {
            let a = s.score(Adorn::integer(n));
            assert!(is_horror_vacui(&s, &mut eval, a, &u).unwrap());
        }
        // ⟨∅⁰|score(−1)⟩: Right escapes to −1 below Left's ending 0.
        let minus = s.score(Adorn::integer(-1));
        let bad = s.intern(Side::Atom(Adorn::zero()), Side::Options(vec![minus])).unwrap();
        assert!(!is_horror_vacui(&s, &mut eval, bad, &u).unwrap());
        assert!(!eval.member(&s, bad, &u));

        let up = s.pura(Adorn::integer(1), Adorn::integer(2));
        let down = s.pura(Adorn::integer(2), Adorn::integer(1));
        assert!(eval.member(&s, up, &u));
        assert!(!eval.member(&s, down, &u));

        assert!(matches!(
            is_horror_vacui(&s, &mut eval, minus, &Universe::misere()),
            Err(EngineError::UnsupportedUniverse { .. })
        ));
    }

    #[test]
    fn enumeration_sizes_and_guard() {
        let (mut s, mut eval) = setup();
        let u = Universe::dicot_misere();
        let zero_pool = [Adorn::zero()];
        assert_eq!(enumerate_kernel(&mut s, &u, 0, &zero_pool).unwrap().len(), 1);
        assert_eq!(enumerate_kernel(&mut s, &u, 1, &zero_pool).unwrap().len(), 2);
        let pool = enumerate_kernel(&mut s, &u, 2, &zero_pool).unwrap();
        assert_eq!(pool.len(), 10);
        for &g in &pool {
            assert!(eval.member(&s, g, &u));
            assert!(s.rank(g) <= 2);
        }
        assert!(matches!(
            enumerate_kernel(&mut s, &u, 3, &zero_pool),
            Err(EngineError::EnumerationTooLarge { .. })
        ));
        assert!(matches!(
            enumerate_kernel(&mut s, &u, 1, &[Adorn::integer(1)]),
            Err(EngineError::AdornOutsideDomain { .. })
        ));
    }

    #[test]
    fn extension_accepts_generators_and_rejects_strays() {
        let (mut s, mut eval) = setup();
        let dicot = Universe::dicot_misere();
        let zero = s.zero();
        let one_bar = s.intern(Side::Options(vec![zero]), Side::Atom(Adorn::zero())).unwrap();
        let ext = dicot.extend(&mut s, &[one_bar]).unwrap();

        assert!(eval.member(&s, one_bar, &ext));
        let conj = s.conjugate(one_bar);
        assert!(eval.member(&s, conj, &ext));
        let star = s.star();
        assert!(eval.member(&s, star, &ext));
        let parental = s
            .intern(Side::Options(vec![one_bar]), Side::Options(vec![zero]))
            .unwrap();
        assert!(eval.member(&s, parental, &ext));

        let stray = s
            .intern(Side::Options(vec![zero, one_bar]), Side::Atom(Adorn::zero()))
            .unwrap();
        assert!(!eval.member(&s, stray, &ext));

        let mut ext = ext;
        let doubled = s.sum(one_bar, one_bar);
        assert!(!eval.member(&s, doubled, &ext));
        ext.register_sum_member(&s, doubled);
        assert!(eval.member(&s, doubled, &ext));
    }

    #[test]
    fn extension_rejects_bad_generators() {
        let (mut s, _) = setup();
        let dicot = Universe::dicot_misere();
        let star = s.star();
        assert!(matches!(
            dicot.extend(&mut s, &[star]),
            Err(EngineError::GeneratorNotOneSideAtomic { .. })
        ));
        let zero = s.zero();
        assert!(matches!(
            dicot.extend(&mut s, &[zero]),
            Err(EngineError::GeneratorNotOneSideAtomic { .. })
        ));
        let noisy = s.intern(Side::Options(vec![zero]), Side::Atom(Adorn::integer(2))).unwrap();
        assert!(matches!(
            dicot.extend(&mut s, &[noisy]),
            Err(EngineError::AdornOutsideDomain { .. })
        ));
    }

    #[test]
    fn valuations_are_order_preserving_examples() {
        let lo = Adorn::integer(-3);
        let hi = Adorn::ratio(1, 2).unwrap();
        for v in [Valuation::NormalPlay, Valuation::MiserePlay, Valuation::Scoring] {
            let l = v.nu_left(&lo).cmp_same(&v.nu_left(&hi)).unwrap();
            let r = v.nu_right(&lo).cmp_same(&v.nu_right(&hi)).unwrap();
            assert_ne!(l, std::cmp::Ordering::Greater);
            assert_ne!(r, std::cmp::Ordering::Greater);
        }
    }
}
