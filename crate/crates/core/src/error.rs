//! Error type shared by the series engine, the family constructors and the
//! identity checkers.

use std::fmt;

/// Errors surfaced by fallible operations. Order mismatches between series
/// are treated as caller bugs and panic instead of reporting here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division of formal series where the numerator valuation is smaller
    /// than the denominator valuation; `order` is the pole order of the
    /// would-be quotient.
    Pole { order: usize },
    /// Denominator series with every retained coefficient zero.
    ZeroDenominator,
    /// Parameter combination outside a checker's or constructor's domain.
    InvalidArgument(String),
    /// A value that makes the requested object undefined (vanishing
    /// normalization constant, zero node where a reciprocal is needed, ...).
    Singular(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { order } => write!(f, "pole of order {order}"),
            Error::ZeroDenominator => write!(f, "denominator series is identically zero"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Singular(msg) => write!(f, "singular parameter: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
