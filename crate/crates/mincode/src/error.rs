use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] mincode_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("reproduction failed: {0}")]
    Mismatch(String),
}

impl AppError {
    /// 2 for mathematical failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Contradiction(_) | AppError::Mismatch(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
