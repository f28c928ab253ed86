use thiserror::Error;

/// Errors raised by polynomial construction and the order-theoretic queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid exponent {0}: exponents must be non-negative")]
    InvalidExponent(i64),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("raw polynomial is not symmetric (monomial {0:?})")]
    NotSymmetric(Vec<u32>),

    #[error("exponent vector {exponents:?} has length {found}, expected {expected}")]
    WrongLength {
        exponents: Vec<u32>,
        expected: usize,
        found: usize,
    },

    #[error("formula domain: {0}")]
    FormulaDomain(String),

    #[error("invalid partition {parts:?}: parts must lie in [{min}, {max}]")]
    InvalidPartition { parts: Vec<u32>, min: u32, max: u32 },

    #[error("multisets {0} and {1} differ in arity or degree")]
    IncomparableDomains(String, String),

    #[error("polynomial has empty support")]
    EmptySupport,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
