use thiserror::Error;

/// Errors raised by the algebra, interpolation and web routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("division by the zero function")]
    DivisionByZero,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("invalid web specification: {0}")]
    Spec(String),

    #[error("degenerate interpolant: {0}")]
    DegenerateInterpolant(String),

    #[error("evaluation pole: {0}")]
    EvaluationPole(String),

    #[error("degenerate restriction: {0}")]
    DegenerateRestriction(String),

    #[error("invalid index: {0}")]
    Index(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
