use convex_dispersion::DispersionError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, malformed or non-convex input; exit code 2.
    #[error("bad input: {0}")]
    Input(String),
    /// Parameters out of range for the input; exit code 3.
    #[error("bad parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn params(msg: impl Into<String>) -> Self {
        CliError::Params(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Params(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<DispersionError> for CliError {
    fn from(e: DispersionError) -> Self {
        match e {
            DispersionError::RejectedInput(_) => CliError::Input(e.to_string()),
            _ => CliError::Params(e.to_string()),
        }
    }
}
