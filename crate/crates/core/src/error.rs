use std::path::PathBuf;

use thiserror::Error;

/// Contract and precondition failures raised by the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegError {
    #[error("empty signal")]
    EmptySignal,
    #[error("non-finite value at position {index}")]
    NonFiniteValue { index: usize },
    #[error("invalid segment ({j}, {i}] for a signal of length {n}")]
    InvalidSegment { j: usize, i: usize, n: usize },
    #[error("penalty must be a finite nonnegative number")]
    InvalidPenalty,
    #[error("epsilon must be a finite positive number")]
    InvalidEpsilon,
    #[error("value cap must be a finite nonnegative number")]
    InvalidValueCap,
    #[error("penalty must be positive for multiplicative mode")]
    PenaltyNotPositive,
    #[error("brute force is limited to {max} points, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("state index {i} out of range 1..={n}")]
    StateOutOfRange { i: usize, n: usize },
    #[error("engine size must be at least 1")]
    EmptyEngine,
    #[error("out-of-order push: expected a_{expected}, got a_{got}")]
    OutOfOrderPush { expected: usize, got: usize },
    #[error("query at {i} needs a_0..a_{} pushed, only {pushed} values present", i - 1)]
    QueryBeforePush { i: usize, pushed: usize },
    #[error("query at {i} comes after a query at {last}; queries must be nondecreasing")]
    QueryOutOfOrder { i: usize, last: usize },
    #[error("duplicate point tag {tag}")]
    DuplicateTag { tag: usize },
    #[error("point {tag} has non-finite coordinates")]
    NonFinitePoint { tag: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),
}

/// Failures while ingesting a signal file.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Unreadable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: not a number: {text:?}")]
    NonNumeric { line: usize, text: String },
    #[error("line {line}: non-finite value")]
    NonFinite { line: usize },
    #[error("empty signal")]
    Empty,
}

impl InputError {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            InputError::Unreadable { .. } => "unreadable",
            InputError::NonNumeric { .. } => "non_numeric",
            InputError::NonFinite { .. } => "non_finite",
            InputError::Empty => "empty_signal",
        }
    }
}
