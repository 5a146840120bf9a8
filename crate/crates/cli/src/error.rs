use std::fmt;

use ellq_verify::VerifyError;

/// Failures of a command, each with its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, parameters or preconditions (exit 2).
    Usage(String),
    /// Library error; the status depends on the variant.
    Core(ellq_core::Error),
    /// No polynomial within the bounds (exit 4).
    NotFound(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn exit_code(&self) -> i32 {
        use ellq_core::Error::*;
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(Domain(_) | DivisionByZero(_) | InsufficientPrecision { .. }) => 2,
            CliError::Core(NonConvergence { .. } | CrossCheck(_) | Verification(_)) => 3,
            CliError::NotFound(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::NotFound(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<ellq_core::Error> for CliError {
    fn from(e: ellq_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Core(e) => CliError::Core(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
