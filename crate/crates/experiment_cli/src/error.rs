use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("no cached transmissivities at {0} and generation is disabled")]
    MissingSamples(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed cache file {path}: {reason}")]
    Cache { path: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Turbulence(#[from] turbulence_channel::TurbulenceError),
    #[error(transparent)]
    Engine(#[from] gaussian_engine::EngineError),
    #[error(transparent)]
    Gain(#[from] gain_policy::GainError),
    #[error(transparent)]
    NonGauss(#[from] nongaussian::NonGaussError),
    #[error(transparent)]
    Entanglement(#[from] entanglement_metrics::EntanglementError),
}

impl CliError {
    /// Short machine-readable tag for the error line.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::MissingSamples(_) => "MissingSamples",
            Self::Config(_) => "Config",
            Self::Cache { .. } => "Cache",
            Self::Io(_) => "Io",
            Self::Csv(_) => "Csv",
            Self::Toml(_) => "Toml",
            Self::Turbulence(turbulence_channel::TurbulenceError::GridUndersampled { .. }) => "GridUndersampled",
            Self::Turbulence(_) => "Turbulence",
            Self::Engine(_) => "Engine",
            Self::Gain(_) => "Gain",
            Self::NonGauss(nongaussian::NonGaussError::QuadratureNotConverged { .. }) => "QuadratureNotConverged",
            Self::NonGauss(_) => "NonGauss",
            Self::Entanglement(_) => "Entanglement",
        }
    }
}
