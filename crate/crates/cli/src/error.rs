use std::fmt::Display;

/// Command failures, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed input: exit code 2.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input outside an operation's domain: exit code 1.
    #[error("error: {0}")]
    Domain(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn parse(msg: impl Display) -> Self {
        CliError::Parse(msg.to_string())
    }

    pub fn domain(msg: impl Display) -> Self {
        CliError::Domain(msg.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<bwtrun_core::Error> for CliError {
    fn from(e: bwtrun_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}
