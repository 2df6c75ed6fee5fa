use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("metric is degenerate")]
    SingularMetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("degenerate case: {0}")]
    DegenerateCase(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid description: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
