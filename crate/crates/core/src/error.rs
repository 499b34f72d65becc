use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sequences have different totals ({left} vs {right})")]
    UnequalSums { left: u64, right: u64 },

    #[error("entropy is undefined for a graph without edges")]
    NoEdges,

    #[error("reports have different degree totals ({left} vs {right})")]
    MismatchedTotals { left: u64, right: u64 },

    #[error("{what} is limited to {limit}, got {got}")]
    ScopeExceeded { what: &'static str, limit: usize, got: usize },

    #[error("theorem precondition unmet: {0}")]
    PreconditionUnmet(String),
}
