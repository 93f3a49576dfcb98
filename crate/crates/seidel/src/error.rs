use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("order mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid Seidel matrix at ({row},{col}): {reason}")]
    InvalidSeidel {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("search budget exceeded: order {order} above limit {limit}")]
    BudgetExceeded { order: usize, limit: usize },

    #[error("operation not applicable: {0}")]
    NotApplicable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("order too large for {op}: {n} > {max}")]
    OrderTooLarge { op: &'static str, n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
