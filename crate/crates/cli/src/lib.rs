//! Command-line front end for `wopow-core`: graph loading, every
//! computation as a subcommand, and the theorem sweep harness.
//!
//! Exit status is 0 on success, 1 when a check fails (theorem violation,
//! disagreeing methods, failed transform check), and 2 for usage, input and
//! resource-cap errors.

pub mod app;
pub mod input;
pub mod report;
pub mod sweep;

pub use app::run;
pub use sweep::{run_sweep, SweepFamily, SweepReport, SweepSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] wopow_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
