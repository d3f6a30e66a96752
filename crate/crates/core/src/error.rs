//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the training library.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of operands do not line up (also raised for asymmetric
    /// input to the symmetric eigensolver).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A configuration or argument value is outside its admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A numeric procedure failed (non-SPD system, eigensolver stall,
    /// non-finite values where finite ones are required).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Input text could not be interpreted.
    #[error("parse error: {0}")]
    Parse(String),

    /// A requested size exceeds a hard limit.
    #[error("size limit exceeded: {0}")]
    Size(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
