//! Table regeneration and single evaluations on top of `tricomi-core`.
//!
//! The binary in `main.rs` only parses flags; everything it prints is built
//! and rendered here so that it can be tested without spawning a process.

pub mod commands;
pub mod render;

pub use commands::{eval, table1, table2, EvalRequest, Report};
pub use render::{c_scientific, mantissa_exponent, Cell, Format, OutputSpec, Table};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] tricomi_core::Error),
    #[error("malformed csv: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Process exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(tricomi_core::Error::Convergence(_)) => EXIT_CONVERGENCE,
            CliError::Io(_) => 1,
            _ => EXIT_USAGE,
        }
    }
}
