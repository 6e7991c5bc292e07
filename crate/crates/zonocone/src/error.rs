use std::io;

use zonocone_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl AppError {
    pub fn input(msg: impl Into<String>) -> Self {
        AppError::Input(msg.into())
    }

    /// Process exit code: 3 for effort-cap refusals, 1 for internal
    /// inconsistencies, 2 for anything wrong with the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(e) if e.is_cap() => 3,
            AppError::Core(CoreError::Internal(_)) => 1,
            _ => 2,
        }
    }
}

pub type AppResult<T> = Result<T, AppError>;
