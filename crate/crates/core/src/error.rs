//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by every module of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Caller supplied shapes or settings the operation cannot satisfy.
    #[error("configuration error: {0}")]
    Config(String),

    /// Non-finite value detected; `context` names the layer/time step.
    #[error("numeric error: non-finite value in {context}")]
    NonFinite { context: String },

    /// Estimator preconditions violated (e.g. too few examples).
    #[error("domain error: {0}")]
    Domain(String),

    /// Inconsistency that indicates a bug in bookkeeping, not in caller input.
    #[error("internal error: {0}")]
    Internal(String),

    /// Malformed file contents; `offset` is the byte or record index.
    #[error("format error at offset {offset}: {detail}")]
    Format { offset: u64, detail: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
