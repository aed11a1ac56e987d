use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QfeError {
    #[error("unknown index {0}")]
    UnknownIndex(String),
    #[error("{0} indices exceeds the evaluation limit")]
    TooLarge(usize),
    #[error("outputs with nonzero square terms: {0:?}")]
    DirtyOutputs(Vec<String>),
    #[error("fractional cross terms are not allowed here: {0}")]
    Fractional(String),
    #[error("bad certificate: {0}")]
    BadCertificate(String),
    #[error("|I| = {inputs} differs from |O| = {outputs}")]
    UnequalIO { inputs: usize, outputs: usize },
    #[error("invalid: {0}")]
    Invalid(String),
}

pub type QfeResult<T> = Result<T, QfeError>;
