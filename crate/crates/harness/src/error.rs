use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error(transparent)]
    Core(#[from] degree_mvn_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
}

impl HarnessError {
    pub fn param(msg: impl Into<String>) -> Self {
        HarnessError::Param(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.into(), source }
    }

    /// Process exit status: 2 for bad parameters, 3 for IO failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Param(_) | HarnessError::Core(_) | HarnessError::Parse { .. } => 2,
            HarnessError::Io { .. } => 3,
        }
    }
}
