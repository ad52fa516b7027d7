//! Error types shared across the crate.

use thiserror::Error;

/// Which of the four invariant conditions a candidate matrix violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantCondition {
    /// `m_{1,1} > 0` and `0 <= m_{i,j} <= n_j`.
    I,
    /// Rows pairwise incomparable under the shift order.
    II,
    /// For each column `j < t` some row has `m_{i,j} > 0` and `m_{i,j+1} < n_{j+1}`.
    III,
    /// Rows strictly decreasing in lexicographic order.
    IV,
}

impl std::fmt::Display for InvariantCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            InvariantCondition::I => "i",
            InvariantCondition::II => "ii",
            InvariantCondition::III => "iii",
            InvariantCondition::IV => "iv",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("profile vector must have at least one entry")]
    EmptyProfile,

    #[error("hierarchy must have at least one class")]
    EmptyHierarchy,

    #[error("class {index} has size 0; every class must be non-empty")]
    EmptyClass { index: usize },

    #[error("matrix must have at least one row")]
    EmptyMatrix,

    #[error("profile {profile:?} out of range for hierarchy {hierarchy:?}")]
    ProfileOutOfRange {
        profile: Vec<u32>,
        hierarchy: Vec<u32>,
    },

    #[error("condition ({which}) violated: {detail}")]
    ConditionViolation {
        which: InvariantCondition,
        detail: String,
    },

    #[error("operation requires exactly one shift-minimal winning vector, got {rows}")]
    NotSingleRow { rows: usize },

    #[error("profile grid has {cells} cells, exceeding the sweep limit of {limit}")]
    GridTooLarge { cells: u128, limit: u128 },

    #[error("quota must be positive")]
    NonPositiveQuota,

    #[error("class weights must be non-negative")]
    NegativeWeight,

    #[error("expected one weight per class ({classes}), got {weights}")]
    WeightCountMismatch { classes: usize, weights: usize },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    /// No closed form is known for this (family, t, r) combination.
    /// A contract signal, not a defect.
    #[error("no closed formula available for {family} games with t={t}, r={r}")]
    NoFormulaAvailable {
        family: String,
        t: String,
        r: String,
    },

    #[error("invalid count query: {0}")]
    InvalidQuery(String),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PowerError {
    #[error("invalid bipartite game: {0}")]
    InvalidGame(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid semivalue weights: {0}")]
    InvalidWeights(String),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("explicit games support at most {cap} players, got {players}")]
    TooLarge { players: usize, cap: usize },

    #[error("game is not complete: players {i} and {j} are incomparable under the desirability relation")]
    NotComplete { i: usize, j: usize },

    #[error("winning coalition set is not monotone: {0:#b} wins but a superset loses")]
    NotMonotone(u32),

    #[error("the empty coalition must lose")]
    EmptyWins,

    #[error("the grand coalition must win")]
    GrandLoses,

    #[error("expected one weight per player ({players}), got {weights}")]
    WeightCountMismatch { players: usize, weights: usize },

    #[error(transparent)]
    Game(#[from] GameError),
}
