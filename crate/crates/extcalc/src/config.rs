//! Optional `key=value` defaults read from the file named by `EXTCALC_CONFIG`.
//! Blank lines and lines starting with `#` are skipped.

use std::path::Path;

use crate::error::CliError;

pub const CONFIG_ENV: &str = "EXTCALC_CONFIG";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub p: Option<u64>,
    pub n_exp: Option<u64>,
    pub max_coh: Option<u64>,
    pub max_index: Option<u64>,
    pub format: Option<String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Config::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| CliError::Param(format!("config line {}: {msg}", no + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || value.parse::<u64>().map_err(|_| bad(&format!("'{value}' is not a number")));
            match key {
                "p" => cfg.p = Some(number()?),
                "N" => cfg.n_exp = Some(number()?),
                "max_coh" => cfg.max_coh = Some(number()?),
                "max_index" => cfg.max_index = Some(number()?),
                "format" => cfg.format = Some(value.to_string()),
                _ => return Err(bad(&format!("unknown key '{key}'"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Param(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The file named by `EXTCALC_CONFIG`, or empty defaults when unset.
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Self::load(Path::new(&path)),
            _ => Ok(Config::default()),
        }
    }
}
