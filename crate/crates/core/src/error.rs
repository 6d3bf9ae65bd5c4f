use thiserror::Error;

/// Errors raised by the computation and checking layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index `{name}` must be nonnegative, got {value}")]
    NegativeIndex { name: &'static str, value: i64 },

    #[error("series divisor's first nonzero coefficient is not a nonzero rational constant")]
    NonUnitLeadingCoefficient,

    #[error("numerator valuation {numerator} is below divisor valuation {denominator}")]
    ValuationMismatch {
        numerator: String,
        denominator: String,
    },

    #[error("inner series of a composition must have zero constant term")]
    NonNilpotentInner,

    #[error("expected {expected} values, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("routes disagree for {what}: {detail}")]
    InternalIdentityFailure { what: String, detail: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid request: {0}")]
    InvalidRequest(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Converts a signed index into `usize`, rejecting negatives.
pub(crate) fn index(name: &'static str, value: i64) -> Result<usize> {
    usize::try_from(value).map_err(|_| Error::NegativeIndex { name, value })
}
