use thiserror::Error;

/// Domain errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch {0} vs {1}")]
    DimensionMismatch(u32, u32),

    #[error("dimension too small: suspension requires dim >= 2, got {0}")]
    DimensionTooSmall(u32),

    #[error("negative degree")]
    NegativeDegree,

    #[error("restriction isomorphism unavailable: w2 of a suspension is only determined for dim >= 4, got {0}")]
    RestrictionUnavailable(u32),

    #[error("tunnel sum hypothesis violated: {0}")]
    TunnelHypothesis(String),

    #[error("pullback hypothesis violated: {0}")]
    PullbackHypothesis(String),

    #[error("not realizable as 1-connected 5-manifold data: {0}")]
    Unrealizable(String),

    #[error("Euler class data is not primitive: {0}")]
    NonPrimitiveEuler(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Syntax error with a byte offset into the input and what was expected there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl ParseError {
    pub fn new(offset: usize, expected: impl Into<String>, found: impl Into<String>) -> Self {
        ParseError {
            offset,
            expected: expected.into(),
            found: found.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
