use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("monomial has {found} exponents but the ring has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} by the zero ideal is undefined")]
    ZeroIdeal(&'static str),

    #[error("{0} requires a proper nonzero ideal")]
    ImproperIdeal(&'static str),

    #[error("containment violated: generator {generator} of the inner ideal is not in the outer ideal")]
    NotContained { generator: String },

    #[error("inconsistent Hilbert numerator: {0}")]
    InconsistentNumerator(String),

    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
