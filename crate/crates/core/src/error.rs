use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("edge weight {0} outside (-1, 1]")]
    BadWeight(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("geometries not composable: {0}")]
    NotComposable(String),
    #[error("ill-formed circuit: {0}")]
    IllFormedCircuit(String),
    #[error("ill-formed pattern: {0}")]
    IllFormedPattern(String),
    #[error("invalid fixture parameters: {0}")]
    BadParameters(String),
    #[error("json: {0}")]
    Json(String),
}

pub type CoreResult<T> = Result<T, CoreError>;
