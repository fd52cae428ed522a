//! Crate-wide error type.

use std::fmt;

/// Errors surfaced by constructors, strategies, and the ingestion pipeline.
#[derive(Debug)]
pub enum Error {
    /// Key array is empty or not strictly increasing.
    InvalidKeys { reason: String },
    /// Distribution has negative mass or its total is too far from 1.
    InvalidDistribution { reason: String },
    /// Two distributions (or a distribution and a key array) disagree on length.
    LengthMismatch { left: usize, right: usize },
    /// A probe or target position lies outside the array.
    PositionOutOfRange { position: usize, len: usize },
    /// A range operation was called with an empty range.
    EmptyRange { lo: usize, hi: usize },
    /// Probe outcomes contradict the presence of the target: the search
    /// range emptied, so the precondition (target in array) was violated.
    NotFound,
    /// A parameter failed its validity check.
    InvalidParameter { name: &'static str, reason: String },
    /// A data file line failed to parse.
    Parse { line: usize, reason: String },
    /// Ingestion produced no keys.
    EmptyKeySet,
    /// Ingestion produced an empty train or test split.
    EmptySplit { which: &'static str },
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidKeys { reason } => write!(f, "invalid key array: {reason}"),
            Error::InvalidDistribution { reason } => write!(f, "invalid distribution: {reason}"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::PositionOutOfRange { position, len } => {
                write!(f, "position {position} out of range for length {len}")
            }
            Error::EmptyRange { lo, hi } => write!(f, "empty range [{lo}, {hi}]"),
            Error::NotFound => write!(f, "target not found: probe outcomes exhausted the range"),
            Error::InvalidParameter { name, reason } => {
                write!(f, "invalid parameter {name}: {reason}")
            }
            Error::Parse { line, reason } => write!(f, "parse error at line {line}: {reason}"),
            Error::EmptyKeySet => write!(f, "ingestion produced an empty key set"),
            Error::EmptySplit { which } => write!(f, "ingestion produced an empty {which} split"),
            Error::Io(e) => write!(f, "io error: {e}"),
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
