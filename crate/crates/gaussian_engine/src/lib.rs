//! Characteristic-function engine for the three-mode erasure-correcting
//! protocol: Gaussian states, the corrected output map, closed-form
//! fidelities, syndrome statistics and BPSK error rates.
//!
//! Conventions: vacuum quadrature variance is 1. For a CF argument
//! `λ = λr + iλi` the CF is `⟨exp(i(λi·x̂ − λr·p̂))⟩`.

pub mod cf;
pub mod error;
pub mod fidelity;
pub mod params;
pub mod protocol;
pub mod syndrome;

pub use cf::{coherent_cf, tmsv_cf, ArgMap, GaussianCf};
pub use error::EngineError;
pub use fidelity::{
    fidelity_coherent_closed, fidelity_direct, output_noise_k, total_fidelity_direct,
    F_CLASSICAL,
};
pub use params::{
    db_to_r, ChannelSample, CoherentEnsemble, CoherentState, ComplexArg,
    DerivedTransmissivities, ProtocolParams, TmsvParams,
};
pub use protocol::{
    output_cf, pre_measurement_state, simulate_protocol_steps, vacuum_noise, SignalAmplitudes,
};
pub use syndrome::{
    ber_bpsk, decode_bpsk, required_displacement, syndrome_stats, syndrome_stats_pipeline,
    ModulationAxis, SyndromeModel, SyndromeStats,
};
