use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Divisor or argument polynomial does not have leading coefficient 1.
    NotMonic,
    /// Reciprocal requested for a polynomial whose constant term is 0 or 2.
    NonUnitConstant,
    /// A positive integer was required.
    ZeroArgument,
    /// The length (or modulus) must be odd.
    EvenLength(u64),
    /// The splitting field needed for this length is wider than supported.
    FieldTooLarge { n: u64, degree: u32 },
    /// The polynomial is not a monic divisor of `X^N - 1`.
    NotADivisor,
    /// A factor id does not exist in the table.
    UnknownFactor(usize),
    /// `f`, `g`, `h` do not partition the factor set.
    InvalidPartition(&'static str),
    /// Brute force requested above the configured length bound.
    BoundExceeded { n: u64, bound: u64 },
    /// A text polynomial could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::NonUnitConstant => write!(f, "constant term is not a unit of Z4"),
            Error::ZeroArgument => write!(f, "argument must be positive"),
            Error::EvenLength(n) => write!(f, "N must be odd (got {n})"),
            Error::FieldTooLarge { n, degree } => write!(
                f,
                "length {n} needs GF(2^{degree}), above the supported degree"
            ),
            Error::NotADivisor => write!(f, "polynomial is not a monic divisor of X^N-1"),
            Error::UnknownFactor(id) => write!(f, "unknown factor id {id}"),
            Error::InvalidPartition(why) => write!(f, "invalid partition: {why}"),
            Error::BoundExceeded { n, bound } => {
                write!(f, "brute force limited to N <= {bound} (got {n})")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
