//! Command-line front end for `cering`: ring-spec documents, property
//! checks, the verification suite and the minimal-ideal search.

pub mod commands;
pub mod report;
pub mod search;
pub mod spec;
pub mod suite;

pub use commands::{execute, Cli};
pub use report::{CheckRecord, Report, Verdict};
pub use spec::{build, parse_ring_spec, Built, GroupSpec, RingSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error(transparent)]
    Ring(#[from] cering::Error),
    #[error(transparent)]
    Rejected(#[from] cering::Rejected),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Cap and enumeration-limit errors.
    pub fn is_cap(&self) -> bool {
        matches!(self, CliError::Ring(e) if e.is_cap())
    }
}
