use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent user data (bad field, bad scalar, axioms fail).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Text-format diagnostics; `line` is 1-based, 0 when unknown.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Mismatched owners: elements of different algebras or groups.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
