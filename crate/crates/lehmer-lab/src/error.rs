//! Library error type.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Series inversion (or a negative power) needs a nonzero constant term.
    #[error("series has zero constant term")]
    ZeroConstantTerm,

    /// A series operation needed a specific constant term.
    #[error("{0}")]
    BadSeriesConstant(&'static str),

    /// Modular binomials via digit products need a prime modulus.
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    /// A scan was too short to confirm the structure it was asked for.
    #[error("scan of {scanned} values is too short to confirm a period")]
    InconclusiveScan { scanned: usize },

    /// Invalid argument outside the contract of an operation.
    #[error("{0}")]
    InvalidInput(String),
}
