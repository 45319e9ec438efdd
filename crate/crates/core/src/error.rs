//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the exact-arithmetic and classification operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// 2-adic valuation of zero is undefined.
    ZeroValuation,
    /// Interval endpoints coincide.
    DegenerateInterval,
    /// Triangle vertices are collinear (or coincide).
    DegenerateTriangle,
    /// Matrix or affine map is not invertible over the dyadic rationals
    /// (determinant is zero or has an odd part other than ±1).
    NonInvertible,
    /// The two integers are not coprime, so no Bézout solution exists.
    NotCoprime,
    /// Quadruple parameters violate their constraints (j, m positive,
    /// 0 ≤ n < j).
    InvalidHat(&'static str),
    /// Encoding triple fields violate their constraints (all odd positive,
    /// 1 ≤ i ≤ 2j − 1).
    InvalidTriple(&'static str),
    /// Text did not match one of the literal grammars.
    Parse(ParseError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroValuation => write!(f, "valuation of zero"),
            Error::DegenerateInterval => write!(f, "degenerate interval: endpoints are equal"),
            Error::DegenerateTriangle => write!(f, "degenerate triangle: vertices are collinear"),
            Error::NonInvertible => write!(f, "map is not invertible over the dyadic rationals"),
            Error::NotCoprime => write!(f, "arguments are not coprime"),
            Error::InvalidHat(msg) => write!(f, "invalid quadruple: {msg}"),
            Error::InvalidTriple(msg) => write!(f, "invalid encoding triple: {msg}"),
            Error::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

/// A literal failed to parse; the message names the offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.msg)
    }
}

impl core::error::Error for ParseError {}
