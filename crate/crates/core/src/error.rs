use std::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An index exceeds the configured table bound.
    Capacity { needed: usize, bound: usize },
    /// An argument is outside the mathematical domain of the operation.
    Domain(String),
    /// Two tuples that must have equal length do not.
    LengthMismatch { left: usize, right: usize },
    /// A tuple pair submitted to a majorization-dependent check is not
    /// actually majorized.
    NotMajorized,
    /// Failed to parse a number from text.
    Parse(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Capacity { needed, bound } => {
                write!(f, "index {needed} exceeds table bound {bound}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::NotMajorized => write!(f, "tuple pair is not majorized"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
