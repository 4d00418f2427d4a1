use std::fmt;

/// Exit codes: 0 success, 1 check failure, 2 usage/config error,
/// 3 numerical error.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Config(String),
    Numerical(String),
    CheckFailed(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Usage(_) | CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Config(msg) => write!(f, "config error: {msg}"),
            CliError::Numerical(msg) => write!(f, "numerical error: {msg}"),
            CliError::CheckFailed(msg) => write!(f, "check failed: {msg}"),
            CliError::Io(err) => write!(f, "io error: {err}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

impl From<cqnc_core::Error> for CliError {
    fn from(err: cqnc_core::Error) -> Self {
        use cqnc_core::Error::*;
        match err {
            DivisionSingularity { .. } | SingularSystem { .. } | ZeroCoupling => {
                CliError::Numerical(err.to_string())
            }
            NonPositiveRate { .. } | MassMissing | UnknownPreset(_) | InvalidParams { .. } => {
                CliError::Config(err.to_string())
            }
        }
    }
}
