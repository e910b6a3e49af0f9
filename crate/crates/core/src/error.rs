use core::fmt;

/// Every failure the core can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    NotPrimePower(u64),
    Reducible,
    DegreeMismatch {
        expected: usize,
        got: usize,
    },
    FieldTooLarge(u64),
    InvalidElement {
        value: u32,
        q: u32,
    },
    DivisionByZero,
    LengthMismatch {
        left: usize,
        right: usize,
    },
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
    ZeroVector,
    EmptyDefiningSet,
    /// `q^k` exceeds the enumeration guard; carries the (saturated) size.
    TooLarge(u64),
    TooManySubspaces(u64),
    NotProjective,
    BadRange(&'static str),
    BadIndex(usize),
    EmptySet,
    CoversWholeSpace,
    AffineForm,
    AmbientMismatch,
    UnsupportedFamily,
    /// A set containing the zero vector was used where only a lift may consume it.
    NeedsLift,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::Reducible => f.write_str("modulus is reducible"),
            Error::DegreeMismatch { expected, got } => {
                write!(
                    f,
                    "modulus must be monic of degree {expected}, got degree {got}"
                )
            }
            Error::FieldTooLarge(q) => write!(f, "field of order {q} is not supported"),
            Error::InvalidElement { value, q } => {
                write!(f, "element {value} out of range for GF({q})")
            }
            Error::DivisionByZero => f.write_str("inverse of zero"),
            Error::LengthMismatch { left, right } => {
                write!(f, "vector lengths differ: {left} vs {right}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            Error::ZeroVector => f.write_str("zero vector not allowed"),
            Error::EmptyDefiningSet => f.write_str("defining set is empty"),
            Error::TooLarge(size) => {
                write!(f, "space of size {size} exceeds the enumeration guard")
            }
            Error::TooManySubspaces(count) => {
                write!(f, "{count} subspaces exceed the enumeration guard")
            }
            Error::NotProjective => f.write_str("set is not projective; project it first"),
            Error::BadRange(what) => write!(f, "parameter out of range: {what}"),
            Error::BadIndex(i) => write!(f, "coordinate index {i} out of range"),
            Error::EmptySet => f.write_str("S must be nonempty"),
            Error::CoversWholeSpace => f.write_str("union of hyperplanes covers the whole space"),
            Error::AffineForm => f.write_str("forms must be linear (b = 0)"),
            Error::AmbientMismatch => f.write_str("sets live in different ambient spaces"),
            Error::UnsupportedFamily => f.write_str("no closed-form distribution for this family"),
            Error::NeedsLift => f.write_str("set contains the zero vector and must be lifted"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
