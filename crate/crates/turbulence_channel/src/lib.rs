//! Free-space channel transmissivities from split-step phase-screen propagation.

mod channel;
mod config;
mod error;
mod fft2;
mod propagate;
mod screen;
mod transmissivity;

pub use channel::{
    excess_noise_model, sample_channel, sample_rng, simulate_ensemble, TransmissivityDistribution, EPS_DETECTOR,
    EPS_PHASE_SLOPE,
};
pub use config::TurbulenceConfig;
pub use error::TurbulenceError;
pub use propagate::{angular_spectrum_propagate, gaussian_field, power, Propagator};
pub use screen::{generate_phase_screen, ScreenGenerator, VonKarman};
pub use transmissivity::{simulate_transmissivity, LinkSimulator};
