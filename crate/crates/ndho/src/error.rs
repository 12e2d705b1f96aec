use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter fell outside the domain of the requested operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A truncated expansion failed its tail bound at the requested cutoff.
    #[error("series not converged: {0}")]
    NotConverged(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
