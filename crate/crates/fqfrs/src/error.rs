//! Error type shared across the crate.

use thiserror::Error;

/// Convenience alias used by every fallible operation in the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced by set construction, model evaluation and the experiment pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A membership degree, weight or quantifier argument left its required range.
    #[error("value out of range: {0}")]
    OutOfRange(String),
    /// Two universes (or vectors) that must match in size do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// An element index fell outside the universe.
    #[error("index {index} out of range for universe of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    /// A weight vector failed validation.
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    /// A monotone measure failed validation.
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    /// A quantifier specification failed validation.
    #[error("invalid quantifier: {0}")]
    InvalidQuantifier(String),
    /// Brute-force enumeration was asked to cover too many cut instantiations.
    #[error("enumeration too large: {0}")]
    Capacity(String),
    /// An experiment or CLI configuration is inconsistent.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A statistic is undefined on the given input.
    #[error("statistic undefined: {0}")]
    StatUndefined(String),
    /// Input data could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// An underlying I/O operation failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for parse and I/O failures, false for domain/validation failures.
    pub fn is_io_or_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_))
    }
}
