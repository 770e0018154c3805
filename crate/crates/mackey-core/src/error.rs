use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Expression parser failure, with a byte offset into the input.
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { position: usize, name: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not square or not invertible over the integers")]
    NonUnimodular,

    #[error("invalid representation specification: {0}")]
    InvalidSpec(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureExceeded { cap: usize },

    #[error("spec file error: {0}")]
    SpecFile(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A cross-check of two definitions that must agree has failed. This is a
    /// bug in the input data (for example, a "custom" group that is not a
    /// reflection group) or in the library itself, never a user error.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
