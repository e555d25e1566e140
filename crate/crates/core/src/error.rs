use thiserror::Error;

/// Errors raised by the library. Everything is exact, so every error is a
/// genuine domain or input problem rather than a numerical one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("series is not invertible: zero constant term")]
    NotInvertible,

    #[error("constant term {0} is not the square of a positive rational")]
    NotSquare(String),

    #[error("division by x^{power} needs the first {power} numerator coefficients to vanish")]
    NonZeroLowTerms { power: usize },

    #[error("series order {have} is too small, need at least {need}")]
    InsufficientOrder { need: usize, have: usize },

    #[error("invalid rational number `{0}`")]
    BadRational(String),

    #[error("denominator polynomial is not invertible (q_0 = 0)")]
    DenominatorNotInvertible,

    #[error("numerator degree {num} must be below denominator degree {den}")]
    NumeratorDegree { num: usize, den: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquareMatrix { rows: usize, cols: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("identity residual is non-zero at index {index}: {value}")]
    Residual { index: usize, value: String },

    #[error("{check} failed at d = {offending:?}")]
    CheckFailed {
        check: String,
        offending: Vec<usize>,
    },

    #[error("noise source exhausted after {0} samples")]
    NoiseExhausted(usize),

    #[error("input length {got} does not match requested length {want}")]
    LengthMismatch { want: usize, got: usize },
}

impl Error {
    /// Errors caused by malformed user text rather than mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnknownCatalog(_) | Error::BadRational(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
