//! Error type shared by all modules.

/// Errors surfaced by the library.
///
/// `Internal` marks conditions that are impossible when the implementation is
/// correct (a failed exact division, a residual negative power of `t`, a
/// recurrence margin that does not close). They are reported as errors rather
/// than panics so a caller can present them, but they always indicate a bug,
/// never bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate step set: {0}")]
    DegenerateStepSet(String),
    #[error("not invertible")]
    NotInvertible,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
