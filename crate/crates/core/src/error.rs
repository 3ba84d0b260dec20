use std::io;

use thiserror::Error;

/// Errors raised by frame construction, the transforms and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid frame parameters: {0}")]
    InvalidParams(String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("frame construction failed: {0}")]
    Construction(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("geometry digest mismatch: file has {found}, frame has {expected}")]
    DigestMismatch { expected: String, found: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
