use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid Motzkin path {0:?}: {1}")]
    InvalidPath(Vec<i8>, &'static str),
    #[error("invalid 1-factor: {0}")]
    InvalidFactor(String),
    #[error("partner table is not an involution at vertex {0}")]
    NotInvolution(usize),
    #[error("vertex {0} is matched to itself")]
    FixedPoint(usize),
    #[error("edges {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index {index} out of range for {what} (k = {k})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        k: usize,
    },
    #[error("expected a path ending in -1")]
    NoPivot,
    #[error("rational function {0} does not reduce to a polynomial")]
    NotPolynomial(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
