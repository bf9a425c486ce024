//! Crate-wide error type.

use std::fmt;

/// Everything that can go wrong while building fields, geometry, linear
/// systems, or codes.  Variants carry just enough context to print a
/// one-line diagnosis.
#[derive(Debug)]
pub enum Error {
    /// `p` passed to a field constructor is not prime.
    NotPrime(u64),
    /// Requested field order p^k exceeds the supported ceiling (2^32).
    FieldTooLarge { p: u64, k: u32 },
    /// An integer that was supposed to be a prime power is not one.
    NotPrimePower(u64),
    /// Two elements (or an element and a field) with different owners were
    /// combined.
    OwnerMismatch { expected: String, got: String },
    /// Division by the zero element.
    DivisionByZero,
    /// The second field is not the base of the first (or the first itself),
    /// so relative Frobenius / coordinate expansion is undefined.
    NotASubfield { field: String, base: String },
    /// An element encoding is outside `0..q`.
    ValueOutOfRange { value: u64, order: u64 },
    /// All-zero coordinates do not define a projective point.
    ZeroPoint,
    /// The zero polynomial does not define a curve.
    ZeroForm,
    /// A form was evaluated at a point with the wrong number of coordinates.
    VariableCount { expected: usize, got: usize },
    /// Vanishing multiplicity other than 1 or 2 was requested.
    UnsupportedMultiplicity(u8),
    /// A linear-system degree below the family's minimum was requested.
    DegreeOutOfRange { what: &'static str, min: u32, got: u32 },
    /// A deterministic search ran out of candidates.
    SearchExhausted(String),
    /// A surface model failed its construction-time verification.
    ModelCheck(String),
    /// The linear system's ambient does not match the surface model.
    AmbientMismatch,
    /// An enumeration would exceed the configured cap.
    CapExceeded { needed: u64, cap: u64 },
    /// Preconditions of the information-set distance search are violated.
    IsdUnsupported(String),
    /// A bound was requested outside its range of validity.
    BoundOutOfRange { what: &'static str, detail: String },
    /// Unknown construction name on the command line or in a file.
    UnknownConstruction(String),
    /// A text file (curve, matrix, system) failed to parse.
    Parse(String),
    /// Underlying I/O failure.
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::FieldTooLarge { p, k } => {
                write!(f, "field order {p}^{k} exceeds the 2^32 ceiling")
            }
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::OwnerMismatch { expected, got } => {
                write!(f, "element owner mismatch: expected {expected}, got {got}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotASubfield { field, base } => {
                write!(f, "{base} is not the base field of {field}")
            }
            Error::ValueOutOfRange { value, order } => {
                write!(f, "encoding {value} is outside a field of order {order}")
            }
            Error::ZeroPoint => write!(f, "all-zero coordinates define no projective point"),
            Error::ZeroForm => write!(f, "the zero polynomial defines no curve"),
            Error::VariableCount { expected, got } => {
                write!(f, "form in {expected} variables evaluated at {got} coordinates")
            }
            Error::UnsupportedMultiplicity(m) => {
                write!(f, "vanishing multiplicity {m} is not supported (only 1 or 2)")
            }
            Error::DegreeOutOfRange { what, min, got } => {
                write!(f, "{what} needs degree >= {min}, got {got}")
            }
            Error::SearchExhausted(what) => write!(f, "search exhausted: {what}"),
            Error::ModelCheck(what) => write!(f, "surface model verification failed: {what}"),
            Error::AmbientMismatch => {
                write!(f, "linear system ambient does not match the surface model")
            }
            Error::CapExceeded { needed, cap } => {
                write!(f, "enumeration needs {needed} steps, cap is {cap}")
            }
            Error::IsdUnsupported(why) => write!(f, "information-set search unsupported: {why}"),
            Error::BoundOutOfRange { what, detail } => write!(f, "{what}: {detail}"),
            Error::UnknownConstruction(name) => write!(f, "unknown construction '{name}'"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
