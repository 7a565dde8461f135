use thiserror::Error;

/// Errors produced by the graph engine and its builders.
#[derive(Debug, Error)]
pub enum LidsError {
    /// A URI or path segment violated the naming rules.
    #[error("invalid name: {0}")]
    InvalidName(String),

    /// A TriG-star document could not be parsed.
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },

    /// A pipeline script could not be parsed.
    #[error("parse error in pipeline '{pipeline_id}' at line {line}: {message}")]
    PipelineParse {
        pipeline_id: String,
        line: usize,
        message: String,
    },

    /// Vector dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    /// A referenced graph node does not exist.
    #[error("not found: {0}")]
    NotFound(String),

    /// A query argument was structurally invalid.
    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, LidsError>;
