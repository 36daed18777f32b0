use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("{what}: size {size} exceeds the exact-search limit {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An inequality that the argument guarantees did not hold. Carries the
    /// full numeric dump.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("sparse coloring failed: {0}")]
    AttemptsExhausted(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, size: usize, limit: usize) -> Self {
        Error::Capacity { what, size, limit }
    }
}
