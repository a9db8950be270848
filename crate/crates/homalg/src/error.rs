use thiserror::Error;

/// Errors raised by constructors, conversions and file handling.
///
/// Axiom *violations* are not errors: checkers always succeed and return a
/// [`crate::report::CheckReport`] whose verdicts describe the violation.
/// An `Error` means the input was not even well-formed enough to check.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimMismatch {
        context: String,
        left: String,
        right: String,
    },

    #[error("matrix of size {dim}x{dim} is not invertible (rank {rank})")]
    Singular { rank: usize, dim: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn dims(
        context: impl Into<String>,
        left: impl Into<String>,
        right: impl Into<String>,
    ) -> Self {
        Error::DimMismatch {
            context: context.into(),
            left: left.into(),
            right: right.into(),
        }
    }

    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
