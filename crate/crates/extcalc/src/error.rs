use extcalc_core::Error;
use thiserror::Error;

use crate::expr::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--{flag}: {err}")]
    Parse { flag: &'static str, err: ParseError },
    #[error("{0}")]
    Param(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for unsupported pairs, 1 for arithmetic overflow, 3 for everything
    /// else the user can fix.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::UnsupportedPair { .. }) => 2,
            CliError::Core(Error::Overflow) => 1,
            _ => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Param(_) => "InvalidParams",
            CliError::Core(Error::UnsupportedPair { .. }) => "UnsupportedPair",
            CliError::Core(Error::InvalidParams(_)) => "InvalidParams",
            CliError::Core(Error::Overflow) => "Overflow",
            CliError::Core(Error::NotAComplex { .. }) => "NotAComplex",
        }
    }
}
