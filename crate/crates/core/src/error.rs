use alloc::string::String;
use core::fmt;

use crate::families::FunctorKind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidParams(String),
    /// No closed form is known for this (source, target) kind pair.
    UnsupportedPair { source: FunctorKind, target: FunctorKind },
    Overflow,
    /// Two consecutive differentials do not compose to zero.
    NotAComplex { position: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::UnsupportedPair { source, target } => write!(
                f,
                "unsupported pair ({}, {}): no closed form",
                source.letter(),
                target.letter()
            ),
            Error::Overflow => f.write_str("integer overflow in dimension count"),
            Error::NotAComplex { position } => {
                write!(f, "differentials {position} and {} do not compose to zero", position + 1)
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}
