use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("bad evaluation point: denominator vanishes at q0={q0} mod {p}")]
    BadEvaluationPoint { p: u64, q0: u64 },
    #[error("operator shape mismatch: {0}")]
    Shape(String),
    #[error("tensor position out of range: {0}")]
    Position(String),
    #[error("component ({d1},{d2}) has {words} words, above the ceiling of {ceiling}")]
    ResourceLimit {
        d1: usize,
        d2: usize,
        words: u128,
        ceiling: u128,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
