use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] leadlag::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: row {row}: {msg}", path.display())]
    Parse { path: PathBuf, row: u64, msg: String },
    #[error("{}: row {row}: time is earlier than the previous row", path.display())]
    UnsortedTime { path: PathBuf, row: u64 },
    #[error("{}: row {row}: duplicate timestamp", path.display())]
    DuplicateTime { path: PathBuf, row: u64 },
    #[error("{}: no data rows", path.display())]
    EmptyInput { path: PathBuf },
    #[error("time value {0} does not fit in the tick range")]
    TimeOverflow(String),
    #[error("time value {value} is finer than one tick ({ticks_per_second} ticks per second)")]
    TimePrecision { value: String, ticks_per_second: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{}: {msg}", path.display())]
    BadConfig { path: PathBuf, msg: String },
}

impl CliError {
    /// Stable machine-readable code, printed as `error[code]`.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::UnsortedTime { .. } => "unsorted_time",
            CliError::DuplicateTime { .. } => "duplicate_time",
            CliError::EmptyInput { .. } => "empty_input",
            CliError::TimeOverflow(_) => "time_overflow",
            CliError::TimePrecision { .. } => "time_precision",
            CliError::InvalidArgument(_) => "invalid_argument",
            CliError::BadConfig { .. } => "bad_config",
        }
    }

    /// The diagnostic on one line.
    pub fn diagnostic(&self) -> String {
        let msg = self.to_string().replace(['\n', '\r'], " ");
        format!("error[{}]: {}", self.code(), msg)
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}
