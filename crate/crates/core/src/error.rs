use thiserror::Error;

/// Errors raised by the library. Axiom failures are reported as data through
/// the `Invalid*` variants; everything else signals unusable input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("unknown {kind} `{id}`")]
    Lookup { kind: &'static str, id: String },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid groupoid: {}", .0.join("; "))]
    InvalidGroupoid(Vec<String>),
    #[error("invalid partial action: {}", .0.join("; "))]
    InvalidAction(Vec<String>),
}

pub type Result<T> = std::result::Result<T, Error>;
