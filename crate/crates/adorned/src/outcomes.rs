//! Outcome evaluation: value pairs, outcome classes, and pass-allowed scores.

use crate::adorn::Adorn;
use crate::compare::Verdict;
use crate::error::EngineError;
use crate::games::{GameId, GameStore, Side};
use crate::universe::{self, ProvisoKind, Universe};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A value from a universe's outcome set: a win/loss sign or an exact score.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OutcomeValue {
    WinLoss(i8),
    Score(Adorn),
}

impl OutcomeValue {
    /// Compares two values from the same outcome set.
    pub fn cmp_same(&self, other: &OutcomeValue) -> Result<Ordering, EngineError> {
        match (self, other) {
            (OutcomeValue::WinLoss(a), OutcomeValue::WinLoss(b)) => Ok(a.cmp(b)),
            (OutcomeValue::Score(a), OutcomeValue::Score(b)) => Ok(a.cmp(b)),
            _ => Err(EngineError::MixedOutcomeValues {
                lhs: self.to_string(),
                rhs: other.to_string(),
            }),
        }
    }

    /// Whether `self ≥ other` within one outcome set.
    pub fn ge(&self, other: &OutcomeValue) -> Result<bool, EngineError> {
        Ok(self.cmp_same(other)? != Ordering::Less)
    }
}

impl fmt::Display for OutcomeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutcomeValue::WinLoss(v) => write!(f, "{v:+}"),
            OutcomeValue::Score(a) => write!(f, "{a}"),
        }
    }
}

/// The pair (o_L, o_R) of left- and right-outcomes of a game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomePair {
    pub left: OutcomeValue,
    pub right: OutcomeValue,
}

impl OutcomePair {
    /// Pointwise order: both components at least as large.
    pub fn ge(&self, other: &OutcomePair) -> Result<bool, EngineError> {
        Ok(self.left.ge(&other.left)? && self.right.ge(&other.right)?)
    }
}

impl fmt::Display for OutcomePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// Classic outcome class of a win/loss pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeClass {
    L,
    R,
    N,
    P,
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self {
            OutcomeClass::L => "L",
            OutcomeClass::R => "R",
            OutcomeClass::N => "N",
            OutcomeClass::P => "P",
        };
        f.write_str(letter)
    }
}

/// Maps a win/loss outcome pair to its class; scores have no class.
pub fn outcome_class(p: &OutcomePair, u: &Universe) -> Result<OutcomeClass, EngineError> {
    if u.is_scoring() {
        return Err(EngineError::UnsupportedUniverse {
            op: "outcome_class",
            universe: u.name().to_string(),
        });
    }
    match (&p.left, &p.right) {
        (OutcomeValue::WinLoss(l), OutcomeValue::WinLoss(r)) => Ok(match (*l > 0, *r > 0) {
            (true, true) => OutcomeClass::L,
            (false, false) => OutcomeClass::R,
            (true, false) => OutcomeClass::N,
            (false, true) => OutcomeClass::P,
        }),
        _ => Err(EngineError::MixedOutcomeValues {
            lhs: p.left.to_string(),
            rhs: p.right.to_string(),
        }),
    }
}

/// Picks the extreme of a non-empty value list under the one-set order.
fn extreme(values: Vec<OutcomeValue>, pick: Ordering) -> OutcomeValue {
    values
        .into_iter()
        .reduce(|best, v| {
            if v.cmp_same(&best).expect("one universe yields one value set") == pick {
                v
            } else {
                best
            }
        })
        .expect("option lists are non-empty")
}

/// Per-universe memo tables for outcomes, membership, and verdicts.
#[derive(Debug, Default)]
pub(crate) struct UniverseCache {
    pub(crate) outcome: HashMap<GameId, OutcomePair>,
    pub(crate) pass_left: HashMap<GameId, OutcomeValue>,
    pub(crate) pass_right: HashMap<GameId, OutcomeValue>,
    pub(crate) member: HashMap<GameId, bool>,
    pub(crate) verdict: HashMap<(GameId, GameId), Verdict>,
    pub(crate) linked: HashMap<(GameId, GameId), bool>,
}

/// Evaluation context: memoized outcomes and order verdicts, keyed by universe name.
#[derive(Debug, Default)]
pub struct Evaluator {
    per: HashMap<String, UniverseCache>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn cache_mut(&mut self, name: &str) -> &mut UniverseCache {
        self.per.entry(name.to_string()).or_default()
    }

    /// Whether `g` belongs to the universe `u`.
    pub fn member(&mut self, store: &GameStore, g: GameId, u: &Universe) -> bool {
        if !u.cacheable_membership() {
            return universe::member_impl(store, self, g, u);
        }
        if let Some(&m) = self.cache_mut(u.name()).member.get(&g) {
            return m;
        }
        let m = universe::member_impl(store, self, g, u);
        self.cache_mut(u.name()).member.insert(g, m);
        m
    }

    /// The outcome pair of a member game.
    pub fn outcome(
        &mut self,
        store: &GameStore,
        g: GameId,
        u: &Universe,
    ) -> Result<OutcomePair, EngineError> {
        if !self.member(store, g, u) {
            return Err(EngineError::NotAMember {
                game: g,
                universe: u.name().to_string(),
            });
        }
        Ok(self.outcome_unchecked(store, g, u))
    }

    /// Outcome evaluation without the membership precondition; callers
    /// must know `g` lies in `u` (for instance as a sum of members).
    pub fn outcome_unchecked(&mut self, store: &GameStore, g: GameId, u: &Universe) -> OutcomePair {
        if let Some(p) = self.cache_mut(u.name()).outcome.get(&g) {
            return p.clone();
        }
        let node = store.node(g);
        let left = match &node.left {
            Side::Atom(a) => u.valuation().nu_left(a),
            Side::Options(ids) => {
                let mut vals = Vec::with_capacity(ids.len());
                for &o in ids {
                    vals.push(self.outcome_unchecked(store, o, u).right);
                }
                extreme(vals, Ordering::Greater)
            }
        };
        let right = match &node.right {
            Side::Atom(a) => u.valuation().nu_right(a),
            Side::Options(ids) => {
                let mut vals = Vec::with_capacity(ids.len());
                for &o in ids {
                    vals.push(self.outcome_unchecked(store, o, u).left);
                }
                extreme(vals, Ordering::Less)
            }
        };
        let pair = OutcomePair { left, right };
        self.cache_mut(u.name()).outcome.insert(g, pair.clone());
        pair
    }

    /// The outcome of `g + ĉ`, computed as a direct adorn shift.
    pub fn outcome_shift(
        &mut self,
        store: &GameStore,
        g: GameId,
        c: &Adorn,
        u: &Universe,
    ) -> Result<OutcomePair, EngineError> {
        if !u.is_scoring() {
            return Err(EngineError::UnsupportedUniverse {
                op: "outcome_shift",
                universe: u.name().to_string(),
            });
        }
        let p = self.outcome(store, g, u)?;
        let shift = |v: OutcomeValue| match v {
            OutcomeValue::Score(a) => OutcomeValue::Score(&a + c),
            win => win,
        };
        Ok(OutcomePair {
            left: shift(p.left),
            right: shift(p.right),
        })
    }

    /// Best score Left can force when Right is also allowed to pass.
    pub fn pass_allowed_left(
        &mut self,
        store: &GameStore,
        g: GameId,
        u: &Universe,
    ) -> Result<OutcomeValue, EngineError> {
        self.check_pass_allowed(store, g, u)?;
        Ok(self.pass_left_rec(store, g, u))
    }

    /// Best score Right can force when Left is also allowed to pass.
    pub fn pass_allowed_right(
        &mut self,
        store: &GameStore,
        g: GameId,
        u: &Universe,
    ) -> Result<OutcomeValue, EngineError> {
        self.check_pass_allowed(store, g, u)?;
        Ok(self.pass_right_rec(store, g, u))
    }

    fn check_pass_allowed(
        &mut self,
        store: &GameStore,
        g: GameId,
        u: &Universe,
    ) -> Result<(), EngineError> {
        if u.proviso() != ProvisoKind::GuaranteedPassAllowed {
            return Err(EngineError::UnsupportedUniverse {
                op: "pass_allowed scores",
                universe: u.name().to_string(),
            });
        }
        if !self.member(store, g, u) {
            return Err(EngineError::NotAMember {
                game: g,
                universe: u.name().to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn pass_left_rec(
        &mut self,
        store: &GameStore,
        g: GameId,
        u: &Universe,
    ) -> OutcomeValue {
        if let Some(v) = self.cache_mut(u.name()).pass_left.get(&g) {
            return v.clone();
        }
        let value = match &store.node(g).left {
            Side::Atom(a) => u.valuation().nu_left(a),
            Side::Options(ids) => {
                let mut vals = Vec::with_capacity(ids.len());
                for &o in ids {
                    vals.push(self.pass_right_reply(store, o, u));
                }
                extreme(vals, Ordering::Greater)
            }
        };
        self.cache_mut(u.name())
            .pass_left
            .insert(g, value.clone());
        value
    }

    /// Right to answer: pass (Left moves again) or make any Right move.
    fn pass_right_reply(&mut self, store: &GameStore, h: GameId, u: &Universe) -> OutcomeValue {
        let mut vals = vec![self.pass_left_rec(store, h, u)];
        for &r in store.right_options(h) {
            vals.push(self.pass_left_rec(store, r, u));
        }
        extreme(vals, Ordering::Less)
    }

    pub(crate) fn pass_right_rec(
        &mut self,
        store: &GameStore,
        g: GameId,
        u: &Universe,
    ) -> OutcomeValue {
        if let Some(v) = self.cache_mut(u.name()).pass_right.get(&g) {
            return v.clone();
        }
        let value = match &store.node(g).right {
            Side::Atom(a) => u.valuation().nu_right(a),
            Side::Options(ids) => {
                let mut vals = Vec::with_capacity(ids.len());
                for &o in ids {
                    vals.push(self.pass_left_reply(store, o, u));
                }
                extreme(vals, Ordering::Less)
            }
        };
        self.cache_mut(u.name())
            .pass_right
            .insert(g, value.clone());
        value
    }

    /// Left to answer: pass (Right moves again) or make any Left move.
    fn pass_left_reply(&mut self, store: &GameStore, h: GameId, u: &Universe) -> OutcomeValue {
        let mut vals = vec![self.pass_right_rec(store, h, u)];
        for &l in store.left_options(h) {
            vals.push(self.pass_right_rec(store, l, u));
        }
        extreme(vals, Ordering::Greater)
    }
}
