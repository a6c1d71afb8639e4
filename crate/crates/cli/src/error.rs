//! Error type and exit-status mapping.

use std::path::Path;

use thiserror::Error;

/// Exit status for verified runs.
pub const EXIT_OK: u8 = 0;
/// Exit status when a check or precondition fails.
pub const EXIT_VERIFICATION: u8 = 2;
/// Exit status for usage and configuration errors.
pub const EXIT_USAGE: u8 = 64;
/// Exit status for filesystem errors.
pub const EXIT_IO: u8 = 74;

/// Everything that stops a run before a report can be judged.
#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid flag combination or value.
    #[error("usage error: {0}")]
    Usage(String),
    /// Configuration that fails to parse or validate.
    #[error("config error: {0}")]
    Config(String),
    /// Error raised by the numerical core.
    #[error(transparent)]
    Core(#[from] antilinear_core::Error),
    /// Filesystem failure.
    #[error("cannot access {path}: {source}")]
    Io {
        /// Offending path.
        path: String,
        /// Underlying error.
        source: std::io::Error,
    },
    /// CSV encoding failure.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Wraps an IO error with the path involved.
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io { path: path.display().to_string(), source }
    }

    /// Wraps a CSV error.
    pub fn csv(e: csv::Error) -> Self {
        Self::Csv(e)
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        use antilinear_core::Error as E;
        match self {
            Self::Usage(_) | Self::Config(_) => EXIT_USAGE,
            Self::Core(E::Domain(_) | E::DimensionMismatch { .. } | E::DegenerateDenominator { .. }) => EXIT_USAGE,
            Self::Core(_) => EXIT_VERIFICATION,
            Self::Io { .. } | Self::Csv(_) => EXIT_IO,
        }
    }
}
