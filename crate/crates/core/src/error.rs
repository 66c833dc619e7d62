use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mixed-mode arithmetic: {0}")]
    ModeMismatch(String),

    #[error("operation `{0}` is not available in exact mode")]
    ExactUnsupported(&'static str),

    #[error("exact mode cannot represent {0}")]
    OffGrid(String),

    #[error("pole of the q-gamma function at {0}")]
    Pole(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parameter collision: {0}")]
    ParameterCollision(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("grid is not usable: {0}")]
    InsufficientGrid(String),

    #[error("no convergence after {terms} terms: {what}")]
    NotConverged { what: String, terms: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("implication violated: {0}")]
    ImplicationViolated(String),
}
