use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("vacuum noise variance is negative ({0:.3e})")]
    NegativeNoiseVariance(f64),
    #[error("both signal channels erased, t_plus = 0")]
    DegenerateChannel,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
