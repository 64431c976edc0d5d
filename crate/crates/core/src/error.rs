//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by constructions, decoders and oracles.
///
/// Each variant maps to one of the command-line exit classes through
/// [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A tree violates prefix-closure, alphabet or horizon constraints.
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    /// Malformed input data that is not a tree (schedules, positions, clauses, graphs).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A text document could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// An exhaustive search would exceed its configured budget.
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    Budget { what: &'static str, needed: u64, limit: u64 },
    /// A decoder or construction received data that breaks its precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A set claimed to be homogeneous is not.
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    /// A limit property cannot be decided at the available horizon.
    #[error("undetermined at horizon {horizon}: {reason}")]
    Undetermined { horizon: usize, reason: String },
}

impl Error {
    /// Process exit code for this error: 1 property failure, 2 input error, 3 budget exhausted.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget { .. } => 3,
            Error::InvalidTree(_) | Error::InvalidInput(_) | Error::Parse { .. } => 2,
            Error::Precondition(_) | Error::NotHomogeneous(_) | Error::Undetermined { .. } => 1,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
