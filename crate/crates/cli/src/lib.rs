//! Command pipelines behind the `kreps` binary.

pub mod commands;
pub mod report;
pub mod sweep;

pub use commands::{cmd_family, cmd_knot, cmd_surface, surface_report, FamilyParams, Options, SecondBraid};
pub use report::Report;
pub use sweep::{run_sweep, verify, SweepConfig, SweepOutcome};

use kreps_core::Error;

/// Environment variable overriding the enumeration cap.
pub const ENUM_CAP_VAR: &str = "KREPS_ENUM_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("family check failed")]
    FamilyCheck(Box<Report>),
    #[error("verification found mismatches")]
    VerifyMismatch(Box<Report>),
}

impl CliError {
    /// Process exit status: 1 for bad input, 2 when the closure is not a knot,
    /// 3 for non-commuting braids, 4 for a failed family check and 5 for a
    /// sweep mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NotAKnot(_)) => 2,
            CliError::Core(Error::NonCommuting) => 3,
            CliError::Core(_) | CliError::Usage(_) => 1,
            CliError::FamilyCheck(_) => 4,
            CliError::VerifyMismatch(_) => 5,
        }
    }
}

/// Parses the cap override, falling back to the library default.
pub fn enum_cap_from(value: Option<&str>) -> Result<u64, CliError> {
    match value {
        None => Ok(kreps_core::DEFAULT_ENUM_CAP),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ENUM_CAP_VAR} must be a non-negative integer, got `{v}`"))),
    }
}
