use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("not unitary: branches {a} and {b} differ ({reason})")]
    NotUnitary { a: String, b: String, reason: String },
    #[error("non-Clifford operation: {0}")]
    NonClifford(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type SimResult<T> = Result<T, SimError>;
