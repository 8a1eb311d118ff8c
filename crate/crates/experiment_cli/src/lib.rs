//! Configuration, Monte Carlo orchestration and CSV output for the protocol sweeps.

pub mod cache;
pub mod config;
pub mod error;
pub mod pool;
pub mod scenarios;
pub mod streams;
pub mod table;

pub use config::{ExperimentConfig, PostSelect, Scenario};
pub use error::CliError;
pub use pool::{apply_post_selection, PostSelected};
pub use scenarios::{
    run, run_classical_sweep, run_fidelity_sweep, run_nongauss_compare, run_rci_sweep, run_turbulence_pdf, Tables,
};
pub use table::{write_table, ResultTable};

use std::path::PathBuf;
use std::time::Instant;

/// Runs the configured scenario and writes every table under `cfg.output_path`.
pub fn run_and_write(cfg: &ExperimentConfig) -> Result<Vec<PathBuf>, CliError> {
    let start = Instant::now();
    let tables = run(cfg)?;
    let elapsed = start.elapsed().as_secs_f64();
    tables.iter().map(|(name, t)| write_table(&cfg.output_path, name, t, cfg, elapsed)).collect()
}
