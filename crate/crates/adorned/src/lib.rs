//! Adorned combinatorial games: trees, sums, outcomes, and universe-relative order.

pub mod adorn;
pub mod compare;
pub mod error;
pub mod games;
pub mod oracle;
pub mod outcomes;
pub mod universe;

pub use adorn::Adorn;
pub use compare::{CnpFailure, GeReason, Player, ProvisoFailure, Verdict};
pub use error::EngineError;
pub use games::{GameId, GameNode, GameStore, Side};
pub use oracle::{BruteForce, Pool, QuasiIdentityReport, SweepRecord};
pub use outcomes::{Evaluator, OutcomeClass, OutcomePair, OutcomeValue};
pub use universe::{AdornDomain, ProvisoKind, Universe, Valuation};
