use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{a} is not coprime to the level {l}")]
    NotCoprime { a: i64, l: i64 },

    #[error("truncation order {have} is below the required {need}")]
    InsufficientTruncation { have: usize, need: usize },

    #[error("(mod l)-polynomial is not {0}")]
    Parity(&'static str),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
