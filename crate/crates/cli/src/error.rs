//! Input errors. Every variant maps to exit code 2; failed mathematical
//! checks are reported as data instead.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("{origin}: {message}")]
    Parse { origin: String, message: String },

    #[error("no {kind} named `{name}`")]
    NameNotFound { kind: &'static str, name: String },

    #[error("name `{name}` is defined in {first} and again in {second}")]
    DuplicateName { name: String, first: String, second: String },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimMismatch { context: String, expected: usize, found: usize },

    #[error("in [{context}]: {message}")]
    Invalid { context: String, message: String },

    #[error(transparent)]
    Core(#[from] rly_core::Error),
}

impl CliError {
    pub fn invalid(context: &str, message: impl ToString) -> Self {
        CliError::Invalid { context: context.to_string(), message: message.to_string() }
    }

    pub fn not_found(kind: &'static str, name: &str) -> Self {
        CliError::NameNotFound { kind, name: name.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;
