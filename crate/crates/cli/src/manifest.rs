//! Run manifests: enough metadata to re-run a command and check that the
//! output bytes are unchanged.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub tool_version: String,
    pub alphabet: String,
    pub inputs: Vec<InputDigest>,
    pub output_sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunManifest {
    /// `command_line` should not carry the `--manifest` option itself.
    pub fn new(
        command_line: Vec<String>,
        alphabet: String,
        inputs: Vec<(String, Vec<u8>)>,
        output: &[u8],
    ) -> Self {
        RunManifest {
            command_line,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            alphabet,
            inputs: inputs
                .into_iter()
                .map(|(name, bytes)| InputDigest {
                    name,
                    sha256: sha256_hex(&bytes),
                })
                .collect(),
            output_sha256: sha256_hex(output),
        }
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let body = std::fs::read_to_string(path)?;
        serde_json::from_str(&body).map_err(|e| CliError::parse(format!("manifest: {e}")))
    }

    /// Re-runs the recorded command line and compares the output digest.
    pub fn replay(&self) -> Result<bool, CliError> {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = crate::run(self.command_line.iter().cloned(), &mut out, &mut err);
        if code != 0 {
            return Err(CliError::domain(String::from_utf8_lossy(&err)));
        }
        Ok(sha256_hex(&out) == self.output_sha256)
    }
}
