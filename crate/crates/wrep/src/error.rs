use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum WrepError {
    #[error(transparent)]
    Core(#[from] wrep_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// Well-formed JSON that does not describe the expected object.
    #[error("schema violation: {0}")]
    Schema(String),
}

pub type Result<T, E = WrepError> = std::result::Result<T, E>;
