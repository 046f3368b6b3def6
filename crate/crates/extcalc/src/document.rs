//! The result document every command emits. Fields are declared in
//! alphabetical order so that the typed and untyped JSON encodings agree
//! byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub bounds: Option<BoundsBlock>,
    pub category: Option<String>,
    /// Rows `[s, i, l, dim]` with `dim > 0`, sorted.
    pub coefficients: Vec<[u64; 4]>,
    pub command: String,
    pub error: Option<ErrorBlock>,
    pub generators: Vec<GeneratorEntry>,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub query: BTreeMap<String, String>,
    pub verification: Option<VerificationReport>,
    pub version: u32,
}

impl ResultDocument {
    pub fn new(command: &str) -> Self {
        ResultDocument {
            bounds: None,
            category: None,
            coefficients: Vec::new(),
            command: command.to_string(),
            error: None,
            generators: Vec::new(),
            p: None,
            q: None,
            query: BTreeMap::new(),
            verification: None,
            version: SCHEMA_VERSION,
        }
    }

    pub fn echo(&mut self, key: &str, value: impl ToString) {
        self.query.insert(key.to_string(), value.to_string());
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsBlock {
    pub gl_n: u64,
    pub strong_m: u64,
    pub strong_q: u64,
    pub vanish_h: u64,
    pub weak_m0: u64,
    pub weak_q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorBlock {
    pub kind: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    /// `[coh, source index, target index]`
    pub degree: [u64; 3],
    pub family: String,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub checks: u64,
    pub failures: Vec<String>,
    pub name: String,
    pub passed: bool,
}
