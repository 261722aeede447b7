use thiserror::Error;

use crate::james::FieldTag;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    Zero,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("logarithm domain error: numerator {num} is smaller than denominator {den}")]
    LogDomain { num: u64, den: u64 },

    #[error("operation is not defined over {0}")]
    UnsupportedField(FieldTag),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length {len} is not a multiple of {modulus}")]
    BadLength { len: usize, modulus: usize },

    #[error("empty input")]
    Empty,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("input vectors are linearly dependent (vector {index} has zero squared norm after projection)")]
    LinearlyDependent { index: usize },

    #[error("family claims field {found}, expected {expected}")]
    ClaimedField { expected: FieldTag, found: FieldTag },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("malformed family file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
