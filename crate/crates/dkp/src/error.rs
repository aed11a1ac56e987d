use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DkpError {
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("not a flow: {0}")]
    NotAFlow(String),
    #[error("singular matrix")]
    Singular,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type DkpResult<T> = Result<T, DkpError>;
