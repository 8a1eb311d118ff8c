use gaussian_engine::EngineError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NonGaussError {
    #[error("beam-splitter kernel integral diverges for amplitude t = {0}")]
    DivergentKernel(f64),
    #[error("quadrature refinements differ by {difference:.3e}")]
    QuadratureNotConverged { difference: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}
