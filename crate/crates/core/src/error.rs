use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("attribute file: {0}")]
    Attributes(String),

    #[error("could not draw an assignment covering all {d} attributes after {attempts} attempts")]
    RetriesExhausted { d: usize, attempts: usize },

    #[error("{what} requires exactly two attribute values, graph has {found}; use the colorful core instead")]
    RequiresTwoAttributes { what: &'static str, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
