use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("coloring file: {0}")]
    Coloring(String),
    #[error("coloring does not match the tree: {0}")]
    Coverage(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] starcolor::Error),
}

impl CliError {
    /// 2 for anything wrong with the input, 3 when an internal check failed.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(starcolor::Error::Internal(_)) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
