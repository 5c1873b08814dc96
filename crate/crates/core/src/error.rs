use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A family or operation parameter is outside its domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("labeling has {got} labels but the graph has {expected} vertices")]
    LabelingLength { expected: usize, got: usize },

    #[error("vertex {0} has label 0; labels must be positive")]
    ZeroLabel(usize),

    #[error("label overflow: {0}")]
    Overflow(String),

    #[error("invalid (r, s) pair ({r}, {s}): {reason}")]
    InvalidPair { r: u64, s: u64, reason: String },

    #[error("construction failed: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
