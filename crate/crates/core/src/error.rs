//! Shared error type. Domain errors (bad parameters, violated preconditions)
//! map to CLI exit code 2; unsupported-case errors (inputs the vanishing
//! argument of Prop 5.1 does not cover) map to exit code 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operands built over different variable contexts.
    #[error("context mismatch: {0}")]
    Context(String),
    /// Parameter outside the domain of the cited statement.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computation the paper's arguments do not cover.
    #[error("unsupported case: {0}")]
    Unsupported(String),
    /// Brute-force size guard (see HECKE_TRACE_MAX_N).
    #[error("size guard: {0}")]
    SizeGuard(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// A live variable was left unassigned in a substitution.
    #[error("incomplete assignment: {0}")]
    Assignment(String),
}

impl Error {
    /// CLI exit code for this error per the interface contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Unsupported(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
