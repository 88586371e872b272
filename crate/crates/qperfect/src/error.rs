use thiserror::Error;

/// Errors shared across the crate. Variants carry enough context to point at
/// the offending input; verification *failures* are not errors (they are
/// reported through [`crate::verify::VerificationReport`]), only violated
/// preconditions and malformed inputs are.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field order {q}: must be a prime <= 65536 or one of 4, 8, 9, 16, 25, 27")]
    UnsupportedOrder { q: u64 },

    #[error("element {value} out of range for GF({q})")]
    ElementOutOfRange { value: u64, q: u32 },

    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u32 },

    #[error("field mismatch: expected GF({expected}), got GF({actual})")]
    FieldMismatch { expected: u32, actual: u32 },

    #[error("length mismatch: expected {expected} symbols, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("cannot normalize the zero vector")]
    ZeroVector,

    #[error("points must be distinct")]
    EqualPoints,

    #[error("points are linearly dependent")]
    DependentPoints,

    #[error("point is not in the geometry for these parameters")]
    UnknownPoint,

    #[error("enumeration needs {required} words, exceeding the cap of {cap}")]
    CapExceeded { required: u128, cap: u64 },

    #[error("violated precondition: {0}")]
    Precondition(String),

    #[error("words at positions {first} and {second} are at distance {distance} < 3")]
    NotOneCode {
        first: usize,
        second: usize,
        distance: usize,
    },

    #[error("codes do not partition the space: {reason}")]
    NotPartition { reason: String },

    #[error("unknown part label {0}")]
    UnknownLabel(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
