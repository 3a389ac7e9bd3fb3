use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field size q = {q} exceeds the configured cap {cap}")]
    FieldTooLarge { q: u128, cap: u64 },

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("element code {0} is outside the field")]
    InvalidElement(u64),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("polynomial is reducible")]
    Reducible,

    #[error("polynomial is not primitive")]
    NotPrimitive,

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("reachable state count exceeded the cap of {0}")]
    StateCap(usize),

    #[error("alpha must be a nonzero field element")]
    ZeroAlpha,

    #[error("insufficient terms: need at least {need}, got {got}")]
    InsufficientTerms { need: usize, got: usize },

    #[error("no linear recurrence of order <= {0} fits the sequence")]
    NoRecurrence(usize),

    #[error("generating function denominator has non-unit constant term")]
    NonUnitDenominator,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error comes from malformed input rather than from a
    /// computation (budget, state cap, failed verification).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::InvalidField(_)
                | Error::FieldTooLarge { .. }
                | Error::InvalidElement(_)
                | Error::Parse { .. }
                | Error::ArityMismatch(..)
                | Error::ZeroAlpha
                | Error::InvalidArgument(_)
        )
    }
}
