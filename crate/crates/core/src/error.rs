use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid radicand {value}: {reason}")]
    InvalidRadicand { value: u64, reason: &'static str },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("step vector must not be empty")]
    EmptySteps,

    #[error("step vector of length {len} exceeds the enumeration cap of {max}")]
    StepVectorTooLong { len: usize, max: usize },

    #[error("step {index} is not strictly positive: {value}")]
    NonPositiveStep { index: usize, value: String },

    #[error("expected {expected} steps, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("order n must be at least 1")]
    ZeroOrder,

    #[error("modulus must be strictly positive, got {0}")]
    NonPositiveModulus(String),

    #[error("parameter t = {0} is outside [0, 1]")]
    ParameterOutOfRange(String),

    #[error("radicand mismatch: sqrt({left}) and sqrt({right}) cannot be mixed")]
    RadicandMismatch { left: u64, right: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_error(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_owned(),
        reason: reason.into(),
    }
}
