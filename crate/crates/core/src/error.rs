use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),

    #[error("entry {0} already present in tableau")]
    DuplicateEntry(usize),

    #[error("entry {0} not present in tableau")]
    MissingEntry(usize),

    #[error("invalid two-line array: {0}")]
    InvalidTwoLineArray(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid integer sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid vacillating tableau: {0}")]
    InvalidVacillating(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("recording tableau admits no valid removal order: {0}")]
    InvalidRecording(String),

    #[error("no valid first-row completion for n = {n}: {reason}")]
    Infeasible { n: usize, reason: String },

    #[error("trace inconsistent with the given shape sequence: {0}")]
    InconsistentTrace(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("sweep budget exceeded: {size} sequences > budget {budget}")]
    BudgetExceeded { size: u64, budget: u64 },

    #[error("unknown theorem name: {0}")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
