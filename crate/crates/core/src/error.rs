use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. Gate violations carry the name of the rule so
/// callers (and the CLI) can report which precondition failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("gate violation [{rule}]: {detail}")]
    GateViolation { rule: &'static str, detail: String },

    #[error("solver failure: {0}")]
    SolverFailure(String),

    #[error("mesh mismatch: {0}")]
    MeshMismatch(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn gate(rule: &'static str, detail: impl Into<String>) -> Self {
        Error::GateViolation {
            rule,
            detail: detail.into(),
        }
    }

    pub fn solver(msg: impl Into<String>) -> Self {
        Error::SolverFailure(msg.into())
    }
}
