use gaussian_engine::EngineError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntanglementError {
    #[error("symplectic eigenvalue {0} below the vacuum level")]
    UnphysicalState(f64),
    #[error("invalid covariance matrix: {0}")]
    InvalidCovariance(String),
    #[error("effective channel is unphysical: {0}")]
    UnphysicalChannel(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}
