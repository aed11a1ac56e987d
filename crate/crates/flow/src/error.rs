use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlowError {
    #[error("|I| = {inputs} differs from |O| = {outputs}")]
    UnequalIO { inputs: usize, outputs: usize },
    #[error("successor map is not a path cover: {0}")]
    NotPathCover(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("YZ set must avoid inputs and outputs: {0}")]
    BadT(String),
    #[error("partition must be nonempty, positive and ascending: {0}")]
    BadPartition(String),
    #[error("invalid arguments: {0}")]
    BadArgs(String),
    #[error("{0} vertices exceeds the brute-force limit")]
    TooLarge(usize),
}

pub type FlowResult<T> = Result<T, FlowError>;
