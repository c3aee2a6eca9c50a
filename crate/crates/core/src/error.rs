use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the origin cannot be used as {0}")]
    Origin(&'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("vertex {0} is a leaf; split requires an interior vertex")]
    LeafSplit(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pin is not a point of the set")]
    PinNotInSet,

    #[error("weight vector contains a zero dot product; enable include_zero to count it")]
    ZeroWeight,

    #[error("construction self-check failed: {0}")]
    Construction(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}
