use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TurbulenceError {
    #[error("beam energy near the grid edge is {fraction:.2e} of the total; enlarge grid_extent")]
    GridUndersampled { fraction: f64 },
    #[error("invalid turbulence configuration: {0}")]
    InvalidConfig(String),
    #[error("transmissivity distribution has no samples")]
    EmptyDistribution,
}
