use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("not a flow: {0}")]
    NotAFlow(String),
    /// With fewer inputs than outputs the flow function is not unique and
    /// there is no known way to match dependencies against the candidates.
    #[error("extraction needs |I| = |O|, got {inputs} inputs and {outputs} outputs")]
    UnequalIO { inputs: usize, outputs: usize },
}

pub type SemanticsResult<T> = Result<T, SemanticsError>;
