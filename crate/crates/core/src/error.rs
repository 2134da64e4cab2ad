use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("series has a non-invertible constant term")]
    NonInvertibleSeries,
    #[error("{0}")]
    WrongSide(String),
    #[error("input is not straightened: {0}")]
    NotStraightened(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("result did not stabilize between truncation {low} and {high}; increase truncation")]
    NotStabilized { low: usize, high: usize },
    #[error("denominator is not a product of binomials and monomials: {0}")]
    NotExpandable(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
