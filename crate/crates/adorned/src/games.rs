//! Adorned game trees: hash-consed nodes, disjunctive sum, conjugation.

use crate::adorn::Adorn;
use crate::error::EngineError;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Interned handle of a game; equal ids mean structurally identical games.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GameId(u32);

impl GameId {
    /// Position of the node in its store.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// One side of a game: an ending atom, or a non-empty sorted option list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Side {
    Atom(Adorn),
    Options(Vec<GameId>),
}

impl Side {
    #[inline]
    pub fn is_atom(&self) -> bool {
        matches!(self, Side::Atom(_))
    }

    /// The ending adorn, when this side is atomic.
    #[inline]
    pub fn atom(&self) -> Option<&Adorn> {
        match self {
            Side::Atom(a) => Some(a),
            Side::Options(_) => None,
        }
    }

    /// The option list; empty for an atomic side.
    #[inline]
    pub fn options(&self) -> &[GameId] {
        match self {
            Side::Atom(_) => &[],
            Side::Options(ids) => ids,
        }
    }
}

/// An immutable interned node; `rank` is the height of the game tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameNode {
    pub left: Side,
    pub right: Side,
    pub rank: u32,
}

/// Append-only interning store for adorned game trees.
///
/// All construction goes through [`GameStore::intern`], which canonicalizes
/// option lists (sorted, deduplicated) and reuses nodes, so id equality is
/// structural identity. Construction needs `&mut`; interned nodes never
/// change afterwards.
#[derive(Debug, Default)]
pub struct GameStore {
    nodes: Vec<GameNode>,
    index: HashMap<(Side, Side), GameId>,
    sum_memo: HashMap<(GameId, GameId), GameId>,
    conjugate_memo: HashMap<GameId, GameId>,
    project_memo: HashMap<GameId, GameId>,
}

impl GameStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of interned nodes.
    #[inline]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Whether `g` belongs to this store.
    #[inline]
    pub fn contains(&self, g: GameId) -> bool {
        g.index() < self.nodes.len()
    }

    /// The node behind an id.
    ///
    /// Panics when `g` was not interned here; ids are only ever minted by
    /// the store that owns the node.
    #[inline]
    pub fn node(&self, g: GameId) -> &GameNode {
        &self.nodes[g.index()]
    }

    #[inline]
    pub fn rank(&self, g: GameId) -> u32 {
        self.node(g).rank
    }

    #[inline]
    pub fn is_left_atomic(&self, g: GameId) -> bool {
        self.node(g).left.is_atom()
    }

    #[inline]
    pub fn is_right_atomic(&self, g: GameId) -> bool {
        self.node(g).right.is_atom()
    }

    /// Whether both sides are atomic, i.e. the game has rank zero.
    #[inline]
    pub fn is_purely_atomic(&self, g: GameId) -> bool {
        let node = self.node(g);
        node.left.is_atom() && node.right.is_atom()
    }

    #[inline]
    pub fn left_options(&self, g: GameId) -> &[GameId] {
        self.node(g).left.options()
    }

    #[inline]
    pub fn right_options(&self, g: GameId) -> &[GameId] {
        self.node(g).right.options()
    }

    /// Interns a game with the given sides.
    ///
    /// Option lists are sorted and deduplicated, so any two structurally
    /// identical games intern to the same id.
    pub fn intern(&mut self, left: Side, right: Side) -> Result<GameId, EngineError> {
        let left = self.canonicalize(left)?;
        let right = self.canonicalize(right)?;
        if let Some(&id) = self.index.get(&(left.clone(), right.clone())) {
            return Ok(id);
        }
        let rank = match self.side_rank(&left).max(self.side_rank(&right)) {
            None => 0,
            Some(r) => r + 1,
        };
        let id = GameId(u32::try_from(self.nodes.len()).expect("store overflow"));
        self.index.insert((left.clone(), right.clone()), id);
        self.nodes.push(GameNode { left, right, rank });
        Ok(id)
    }

    fn canonicalize(&self, side: Side) -> Result<Side, EngineError> {
        match side {
            Side::Atom(a) => Ok(Side::Atom(a)),
            Side::Options(mut ids) => {
                if ids.is_empty() {
                    return Err(EngineError::EmptyOptionList);
                }
                if let Some(&bad) = ids.iter().find(|id| !self.contains(**id)) {
                    return Err(EngineError::UnknownGame(bad));
                }
                ids.sort_unstable();
                ids.dedup();
                Ok(Side::Options(ids))
            }
        }
    }

    /// Largest option rank of a side; `None` for atoms.
    fn side_rank(&self, side: &Side) -> Option<u32> {
        side.options().iter().map(|&o| self.rank(o)).max()
    }

    /// The purely atomic game `⟨∅ˡ|∅ʳ⟩`.
    pub fn pura(&mut self, left: Adorn, right: Adorn) -> GameId {
        self.intern(Side::Atom(left), Side::Atom(right))
            .expect("atomic sides always intern")
    }

    /// The score game `â = ⟨∅ᵃ|∅ᵃ⟩`.
    pub fn score(&mut self, a: Adorn) -> GameId {
        self.pura(a.clone(), a)
    }

    /// The zero game `0̂`.
    pub fn zero(&mut self) -> GameId {
        self.score(Adorn::zero())
    }

    /// The game `* = ⟨0̂|0̂⟩`.
    pub fn star(&mut self) -> GameId {
        let zero = self.zero();
        self.intern(Side::Options(vec![zero]), Side::Options(vec![zero]))
            .expect("star interns")
    }

    /// Disjunctive sum of two games.
    ///
    /// Per side: two atoms add their adorns; otherwise each non-atomic side
    /// contributes its shifted options and an atomic side contributes none.
    pub fn sum(&mut self, g: GameId, h: GameId) -> GameId {
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.sum_memo.get(&key) {
            return s;
        }
        let left = self.sum_side(g, h, |node| &node.left);
        let right = self.sum_side(g, h, |node| &node.right);
        let id = self.intern(left, right).expect("sum components are interned");
        self.sum_memo.insert(key, id);
        id
    }

    fn sum_side(&mut self, g: GameId, h: GameId, side: impl Fn(&GameNode) -> &Side) -> Side {
        match (side(self.node(g)).atom(), side(self.node(h)).atom()) {
            (Some(a), Some(b)) => Side::Atom(a + b),
            _ => {
                let g_opts = side(self.node(g)).options().to_vec();
                let h_opts = side(self.node(h)).options().to_vec();
                let mut shifted = Vec::with_capacity(g_opts.len() + h_opts.len());
                shifted.extend(g_opts.into_iter().map(|o| self.sum(o, h)));
                shifted.extend(h_opts.into_iter().map(|o| self.sum(g, o)));
                Side::Options(shifted)
            }
        }
    }

    /// Conjugate of a game: sides swap, options conjugate, adorns negate.
    pub fn conjugate(&mut self, g: GameId) -> GameId {
        if let Some(&c) = self.conjugate_memo.get(&g) {
            return c;
        }
        let node = self.node(g).clone();
        let left = self.conjugate_side(node.right);
        let right = self.conjugate_side(node.left);
        let id = self.intern(left, right).expect("conjugate components are interned");
        self.conjugate_memo.insert(g, id);
        id
    }

    fn conjugate_side(&mut self, side: Side) -> Side {
        match side {
            Side::Atom(a) => Side::Atom(-&a),
            Side::Options(ids) => Side::Options(ids.into_iter().map(|o| self.conjugate(o)).collect()),
        }
    }

    /// Replaces every adorn in the game by zero, keeping the move structure.
    pub fn project_zero(&mut self, g: GameId) -> GameId {
        if let Some(&p) = self.project_memo.get(&g) {
            return p;
        }
        let node = self.node(g).clone();
        let left = self.project_side(node.left);
        let right = self.project_side(node.right);
        let id = self.intern(left, right).expect("projection components are interned");
        self.project_memo.insert(g, id);
        id
    }

    fn project_side(&mut self, side: Side) -> Side {
        match side {
            Side::Atom(_) => Side::Atom(Adorn::zero()),
            Side::Options(ids) => {
                Side::Options(ids.into_iter().map(|o| self.project_zero(o)).collect())
            }
        }
    }

    /// The set of followers of `g`, including `g` itself, in id order.
    pub fn followers(&self, g: GameId) -> Vec<GameId> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![g];
        while let Some(id) = stack.pop() {
            if !seen.insert(id) {
                continue;
            }
            let node = self.node(id);
            stack.extend(node.left.options());
            stack.extend(node.right.options());
        }
        seen.into_iter().collect()
    }

    /// Whether every adorn in the game is zero.
    pub fn is_zero_adorned(&self, g: GameId) -> bool {
        self.followers(g).into_iter().all(|f| {
            let node = self.node(f);
            [&node.left, &node.right]
                .into_iter()
                .filter_map(Side::atom)
                .all(Adorn::is_zero)
        })
    }

    /// Plain bracket notation, mainly for tests and error reports.
    pub fn notation(&self, g: GameId) -> String {
        let node = self.node(g);
        let side = |s: &Side| match s {
            Side::Atom(a) => format!("e^{a}"),
            Side::Options(ids) => ids
                .iter()
                .map(|&o| self.notation(o))
                .collect::<Vec<_>>()
                .join(","),
        };
        format!("<{}|{}>", side(&node.left), side(&node.right))
    }
}
