use thiserror::Error;

/// Errors for invalid domain values.
///
/// The codec functions themselves are total: once a [`crate::Tuple`],
/// [`crate::MonotoneTuple`] or [`crate::Dimension`] exists, every operation
/// on it succeeds. Invalid arguments are rejected here, at construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("coordinates increase at position {position}, tuple is not in the monotone cone")]
    NotMonotone { position: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("budget of {budget} successor steps exhausted before reaching the target")]
    BudgetExhausted { budget: u64 },
}
