//! The error type shared by every engine module.

use crate::games::GameId;
use thiserror::Error;

/// Errors reported by store operations, evaluation, and comparison.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// An option id does not belong to the store it was handed to.
    #[error("game id {0} is not interned in this store")]
    UnknownGame(GameId),
    /// Option lists are never empty; an empty side is an atom.
    #[error("option lists must be non-empty; use an atom for a side without moves")]
    EmptyOptionList,
    /// An adorn lies outside the universe's adorn domain.
    #[error("adorn {adorn} is outside the adorn domain of {universe}")]
    AdornOutsideDomain { adorn: String, universe: String },
    /// The game fails the universe's membership predicate.
    #[error("game {game} is not a member of {universe}")]
    NotAMember { game: GameId, universe: String },
    /// The operation is not defined for this universe.
    #[error("{op} is not defined for {universe}")]
    UnsupportedUniverse { op: &'static str, universe: String },
    /// The universe only supports comparison through the brute-force oracle.
    #[error("constructive comparison is unavailable for {universe}; use the oracle")]
    ConstructiveUnavailable { universe: String },
    /// The operation requires every adorn in the game to be zero.
    #[error("{op} requires a zero-adorn game, but {game} carries a non-zero adorn")]
    NonZeroAdorn { op: &'static str, game: GameId },
    /// Extension generators must have exactly one atomic side.
    #[error("extension generator {game} is not one-side atomic")]
    GeneratorNotOneSideAtomic { game: GameId },
    /// An enumeration would exceed its size guard.
    #[error("enumeration of {count} candidates exceeds the guard of {guard}")]
    EnumerationTooLarge { count: u128, guard: usize },
    /// Win/loss values and scores never compare with each other.
    #[error("outcome values {lhs} and {rhs} come from different conventions")]
    MixedOutcomeValues { lhs: String, rhs: String },
}
