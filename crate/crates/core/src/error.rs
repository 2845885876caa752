use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("exponent tuple has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("constant monomial in a sequence that must be nonconstant")]
    ConstantMonomial,

    #[error("inhomogeneous element: {0}")]
    Inhomogeneous(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("not a complex: {0}")]
    NotAComplex(String),

    #[error("not a morphism: {0}")]
    NotAMorphism(String),

    #[error("input is not exact: {0}")]
    NotExact(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("index {index} outside the computed range (cutoff {cutoff})")]
    BeyondCutoff { index: i32, cutoff: i32 },

    #[error("deformation does not match the ring: {0}")]
    BadDeformation(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),
}

pub type Result<T> = std::result::Result<T, Error>;
