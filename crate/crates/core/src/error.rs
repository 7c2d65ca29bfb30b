//! Error type shared across the crate.
//!
//! Variants are grouped by how a front end should treat them: [`Error::Io`],
//! [`Error::Parse`], and [`Error::InvalidInput`] mean the user handed us
//! something unusable, while [`Error::Analysis`] and [`Error::NotConverged`]
//! mean a computation could not produce a defined result.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// File-level I/O failure, annotated with the path involved.
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed content at a specific line of an input file.
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// Structurally invalid input or parameters (bad trees, empty corpora,
    /// out-of-range options).
    #[error("{0}")]
    InvalidInput(String),

    /// A computation has no defined result for this input.
    #[error("{0}")]
    Analysis(String),

    /// An iterative fit ran out of iterations.
    #[error("fit did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: u64, residual: f64 },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(path: impl Into<String>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            msg: msg.into(),
        }
    }

    /// True for errors caused by unusable input rather than by analysis
    /// conditions. Front ends use this to pick an exit code.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Parse { .. } | Error::InvalidInput(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
