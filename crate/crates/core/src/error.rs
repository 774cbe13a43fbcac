use thiserror::Error;

/// Errors produced by the library.
///
/// Variants are grouped so that the command line front end can map them onto
/// exit codes: [`Error::is_input_error`] covers malformed input, everything
/// else is a violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("variable index x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("denominator divisible by the characteristic {p}")]
    BadDenominator { p: u64 },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("non-integral coefficient {0} in an integer polynomial")]
    NonIntegral(String),
    #[error("coefficient domains differ ({left} vs {right})")]
    DomainMismatch { left: String, right: String },
    #[error("variable counts differ ({left} vs {right})")]
    NvarsMismatch { left: usize, right: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is singular over the coefficient domain")]
    SingularMatrix,
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
    #[error("invalid bracket support: {0}")]
    InvalidBracket(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("polynomial does not vanish at the origin")]
    NonVanishingAtOrigin,
    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
}

impl Error {
    /// True for errors caused by text that could not be parsed or was out of
    /// range syntactically, as opposed to mathematical preconditions.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::VariableOutOfRange { .. }
                | Error::NotPrime(_)
                | Error::NonIntegral(_)
                | Error::BadDenominator { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
