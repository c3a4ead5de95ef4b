use thiserror::Error;

pub type IoResult<T, E = IoError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Core(#[from] srgswitch_core::Error),
    #[error(transparent)]
    Graph6(#[from] crate::graph6::Graph6Error),
    #[error("line {line}: {reason}")]
    SignText { line: usize, reason: String },
    #[error("invalid transcript JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
}

impl IoError {
    pub(crate) fn file(path: &std::path::Path, source: std::io::Error) -> Self {
        IoError::File {
            path: path.display().to_string(),
            source,
        }
    }
}
