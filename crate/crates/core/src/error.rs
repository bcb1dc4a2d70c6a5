use thiserror::Error;

use crate::tessellation::ViolationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} exceeded capacity limit of {limit}")]
    Capacity { what: &'static str, limit: usize },

    #[error("invalid tessellation or cover: {0}")]
    Invalid(ViolationReport),

    #[error("improper coloring: {0}")]
    ImproperColoring(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
