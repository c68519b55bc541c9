//! File formats and command implementations behind the `wulff` binary.

pub mod body_file;
pub mod commands;
pub mod curve_file;
pub mod svg;

pub use commands::{run, Cli};

/// Anything that ends a command with exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Geometry(#[from] wulff_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
