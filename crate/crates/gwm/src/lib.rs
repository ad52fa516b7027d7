//! Exact arithmetic for complete simple games with one shift-minimal winning
//! vector ("games with minimum").
//!
//! The crate represents such games by their characteristic invariants (class
//! sizes plus the matrix of shift-minimal winning vectors) and provides:
//!
//! * validation, the winning-vector test, shift-maximal losing vectors and
//!   duals ([`game`]);
//! * the weightedness classification with exact-rational weight synthesis
//!   ([`weighted`]);
//! * closed-form enumeration of weighted and complete games with minimum,
//!   plus exhaustive generators used as oracles ([`enumeration`]);
//! * exact Shapley-Shubik, Banzhaf and semivalue computations for bipartite
//!   games, game rankings and the order-conjecture sweep ([`power`]);
//! * a brute-force coalition oracle everything is cross-validated against
//!   ([`oracle`]).
//!
//! All arithmetic is exact: arbitrary-precision integers for counts and
//! rationals for indices and weights. No floating point anywhere.

pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod game;
pub mod json;
pub mod oracle;
pub mod power;
pub mod selfcheck;
pub mod vector;
pub mod weighted;

pub use error::{EnumerationError, GameError, OracleError, PowerError};
pub use game::CompleteGameInvariants;
pub use vector::{Hierarchy, ProfileVector, ShiftOrdering};
pub use weighted::{
    canonical_reduction, classify_weighted, WeightedRepresentation, WeightednessVerdict,
};
