use thiserror::Error;

use crate::arith::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(Int, Int),

    #[error("vertex {0} is isolated")]
    Isolated(String),

    #[error("resource limit exceeded: {0}")]
    ResourceExhausted(String),

    /// A constructed certificate failed its own re-check. Always a bug.
    #[error("certificate verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn isolated(vertex: impl std::fmt::Display) -> Self {
        Error::Isolated(vertex.to_string())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
}
