use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("rewriting did not terminate: {0}")]
    RewriteLimit(String),
    #[error("rewriting rules rejected: {0}")]
    BadRules(String),
    #[error("product leaves the truncation window: {0}")]
    Overflow(String),
    #[error("axiom '{check}' fails: {witness}")]
    AxiomFailure { check: String, witness: String },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
