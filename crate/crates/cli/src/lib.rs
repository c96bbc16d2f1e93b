//! File formats and report schema behind the `arrcomb` binary.

pub mod formats;
pub mod report;

use std::fmt;

/// CLI-level error split by exit code: validation failures exit 1, I/O
/// failures exit 2.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}
