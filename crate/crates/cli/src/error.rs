use thiserror::Error;

/// Failures surfaced by the command line, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: line {line}: {msg}")]
    Parse { path: String, line: usize, msg: String },

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Math(#[from] lacunary::Error),

    #[error("{0}")]
    Failed(String),
}

impl CliError {
    /// 1 for arithmetic or verification failures, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) | CliError::Failed(_) => 1,
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
