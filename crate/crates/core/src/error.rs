use thiserror::Error;

/// Errors raised by the algebra and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("denominator vanishes at d = {0}")]
    PoleAtD(i64),

    #[error("need at least {needed} interpolation samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("duplicate interpolation node d = {0}")]
    DuplicateNode(i64),

    #[error("sample at d = {0} is inconsistent with the interpolant")]
    InconsistentSamples(i64),

    #[error("polynomial is not symmetric in {0} and {1}")]
    NotSymmetric(&'static str, &'static str),

    #[error("non-polynomial result in {context}: denominator {denominator} does not cancel")]
    PolynomialityViolation {
        context: String,
        denominator: String,
    },

    #[error("degree d = {d} is smaller than |lambda| = {weight}")]
    DegreeTooSmall { d: i64, weight: u32 },

    #[error("degree mismatch for {partition} at j = {j}: expected {expected}, found {actual:?}")]
    DegreeMismatch {
        partition: String,
        j: u32,
        expected: u32,
        actual: Option<usize>,
    },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("ambient dimension required for this pushforward")]
    MissingAmbient,

    #[error("cannot parse expression: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
