use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Every report is wrapped in the command that produced it.
#[derive(Serialize, Debug)]
pub struct Manifest<R: Serialize> {
    pub command: String,
    /// Everything that affects the report; `--threads` and `--out` are left out.
    pub parameters: Map<String, Value>,
    /// SHA-256 of the canonical JSON of the input complex, if there is one.
    pub input_hash: Option<String>,
    pub tool_version: String,
    pub report: R,
}

impl<R: Serialize> Manifest<R> {
    pub fn new(command: &str, parameters: Value, canonical_input: Option<&str>, report: R) -> Self {
        let parameters = match parameters {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => panic!("parameters must be an object, got {other}"),
        };
        Manifest {
            command: command.to_string(),
            parameters,
            input_hash: canonical_input.map(sha256_hex),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            report,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}
