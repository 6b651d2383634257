//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated an operation's contract (bad tolerance, degenerate
    /// line, too few points, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed input data (CSV rows, out-of-range coordinates, ...).
    /// The message carries a line number when one is known.
    #[error("data error: {0}")]
    Data(String),

    /// A stored trajectory database failed an internal consistency check.
    #[error("store inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }
}
