//! Reproducible CSV experiments for a particle in a square box under
//! gravity, classical and quantum.

pub mod commands;
pub mod config;
pub mod csv;
pub mod error;

use std::path::PathBuf;

pub use commands::run;
pub use config::{Mode, RunConfig};
pub use csv::{Cell, CsvTable};
pub use error::{HarnessError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Resolves the configuration from raw `--key value` arguments and an
/// optional config file, runs the command and renders the CSV text.
pub fn execute(mode: Mode, config_file: Option<&PathBuf>, params: &[String], out: Option<PathBuf>) -> Result<String> {
    let file = match config_file {
        Some(path) => config::read_config_file(path)?,
        None => Vec::new(),
    };
    let flags = config::parse_flags(params)?;
    let cfg = RunConfig::resolve(mode, &file, &flags, out)?;
    Ok(run(&cfg)?.render(VERSION))
}
