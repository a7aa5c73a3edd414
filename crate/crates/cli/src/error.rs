use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or invalid scenario; exit code 2.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] morse_index::Error),

    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("serialization error: {0}")]
    Serialize(String),
}

impl CliError {
    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Self::Io { path: path.display().to_string(), source }
    }
}
