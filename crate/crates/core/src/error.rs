use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid denominator factor (1 - q^{a} t^{b})^{mult}")]
    InvalidFactor { a: i64, b: u32, mult: u32 },

    #[error("factor (1 - q^{a} t^{b}) is not invertible as a power series in t")]
    NotExpandable { a: i64, b: u32 },

    #[error("numerator has negative t-exponent {0}; no power-series expansion")]
    NegativeTExponent(i64),

    #[error("pole of order {order} at t = 1 survives cancellation")]
    PoleAtT1 { order: u32 },

    #[error("division requires a unit monomial numerator in the divisor")]
    NonMonomialDivisor,

    #[error("gaussian binomial ({a} choose {b}) needs a >= b")]
    GaussianArgs { a: u32, b: u32 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("estimated enumeration size {estimate} exceeds the ceiling {ceiling}")]
    CeilingExceeded { estimate: f64, ceiling: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}
