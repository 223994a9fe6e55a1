use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Text did not match the expected grammar.
    Syntax(String),
    /// Well-formed input that violates a structural invariant.
    Invalid(String),
    /// Argument outside the domain of the operation.
    Domain(String),
    /// Precision escalation hit its cap without deciding.
    PrecisionExhausted { bits: u64 },
    /// A power-family query that needs `α > α₀` was asked below the threshold.
    InvalidRegime(String),
    /// A dense-set oracle ran out of elements.
    OracleExhausted(String),
    /// Resultant of two polynomials that are constant in the eliminated variable.
    Degenerate,
    /// The requested combination has no exact or certified evaluation route.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax(m) => write!(f, "syntax error: {m}"),
            Error::Invalid(m) => write!(f, "invalid input: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::PrecisionExhausted { bits } => {
                write!(f, "precision exhausted at {bits} bits without a decision")
            }
            Error::InvalidRegime(m) => write!(f, "invalid regime: {m}"),
            Error::OracleExhausted(m) => write!(f, "oracle exhausted: {m}"),
            Error::Degenerate => f.write_str("degenerate resultant input"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
        }
    }
}

impl core::error::Error for Error {}
