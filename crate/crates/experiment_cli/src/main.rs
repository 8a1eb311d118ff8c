use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use experiment_cli::{run_and_write, CliError, ExperimentConfig, PostSelect, Scenario};

#[derive(Parser)]
#[command(name = "cvqec", about = "Sweeps for the erasure-correcting CV protocol")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// TOML configuration; missing keys take their defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Monte Carlo samples per point.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for cached transmissivity samples.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Keep only realizations with at most one erased channel.
    #[arg(long, global = true)]
    post_select: bool,
    /// Fail instead of simulating when the cache has no samples.
    #[arg(long, global = true)]
    no_generate: bool,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Total fidelity of the protocol against direct transmission.
    Fidelity,
    /// Displacement needed for the target bit error rate.
    Classical,
    /// Non-Gaussian ancillas against the TMSV.
    Nongauss,
    /// Reverse coherent information bounds.
    Rci,
    /// Fading samples and their histogram.
    Turbulence,
}

impl Command {
    fn scenario(self) -> Scenario {
        match self {
            Self::Fidelity => Scenario::FidelitySweep,
            Self::Classical => Scenario::ClassicalSweep,
            Self::Nongauss => Scenario::NongaussCompare,
            Self::Rci => Scenario::RciSweep,
            Self::Turbulence => Scenario::TurbulencePdf,
        }
    }
}

fn build_config(cli: &Cli) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    cfg.scenario = cli.command.scenario();
    if let Some(s) = cli.seed {
        cfg.master_seed = s;
    }
    if let Some(n) = cli.samples {
        cfg.n_samples = n;
    }
    if let Some(o) = &cli.out {
        cfg.output_path = o.clone();
    }
    if let Some(c) = &cli.cache {
        cfg.cache_dir = Some(c.clone());
    }
    if cli.post_select {
        cfg.post_select = PostSelect::AtMostOneErasure;
    }
    if cli.no_generate {
        cfg.link.generate = false;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("{}", serde_json::json!({ "error": "Config", "message": e.to_string() }));
            return ExitCode::from(2);
        }
    }
    match build_config(&cli).and_then(|cfg| run_and_write(&cfg)) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::FAILURE
        }
    }
}
