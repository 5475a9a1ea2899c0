use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {0} is outside the supported range")]
    FieldTooLarge(u64),
    #[error("no irreducible modulus of degree {1} over F_{0}")]
    NoModulus(u64, u32),
    #[error("zero is not allowed here: {0}")]
    Zero(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precision exhausted: need {needed} coefficients, working precision is {available}")]
    PrecisionExhausted { needed: i64, available: i64 },
    #[error("model dimension {dim} exceeds the size cap {cap}")]
    SizeCapExceeded { dim: usize, cap: usize },
    #[error("operator is not idempotent")]
    NotIdempotent,
    #[error("image of the embedding is not a projection")]
    NotAProjection,
    #[error("stabilization not reached within {cap} levels: {what}")]
    StabilizationCap { cap: usize, what: String },
    #[error("unsupported tower: {0}")]
    UnsupportedTower(String),
    #[error("map does not send {0} into the target group")]
    NotAHomomorphism(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-free group where a free one is required: {0}")]
    NotFree(String),
    #[error("unsupported action: {0}")]
    UnsupportedAction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
