use thiserror::Error;

/// Errors of the whole crate. Variants are grouped by how a front end
/// should treat them: bad input, a case the calculus does not cover, or
/// an internal invariant that failed (the latter always indicates a bug,
/// never bad data).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition ({0}) is not in normal form for genus {1}")]
    NotNormalForm(String, u32),

    #[error("polynomial is not palindromic")]
    NotPalindromic,

    #[error("curve contexts do not match")]
    ContextMismatch,

    #[error("{0}")]
    OutOfRange(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("oracle out of range: degree {degree} exceeds bound {bound}")]
    OracleOutOfRange { degree: u32, bound: u32 },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("malformed json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
