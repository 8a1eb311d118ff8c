use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::TurbulenceConfig;
use crate::error::TurbulenceError;
use crate::transmissivity::LinkSimulator;

pub const EPS_DETECTOR: f64 = 0.013;
pub const EPS_PHASE_SLOPE: f64 = 0.01;

/// Excess noise `ε_det + 0.01(1 − T)`.
pub fn excess_noise_model(t: f64) -> f64 {
    EPS_DETECTOR + EPS_PHASE_SLOPE * (1.0 - t)
}

/// Empirical fading samples mixed with erasures of probability `p_e`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransmissivityDistribution {
    samples: Vec<f64>,
    p_e: f64,
    config_digest: String,
}

impl TransmissivityDistribution {
    pub fn new(samples: Vec<f64>, p_e: f64, config_digest: impl Into<String>) -> Result<Self, TurbulenceError> {
        if samples.is_empty() {
            return Err(TurbulenceError::EmptyDistribution);
        }
        if let Some(bad) = samples.iter().find(|t| !(0.0..=1.0).contains(*t)) {
            return Err(TurbulenceError::InvalidConfig(format!("transmissivity sample {bad} outside [0, 1]")));
        }
        if !(0.0..=1.0).contains(&p_e) {
            return Err(TurbulenceError::InvalidConfig(format!("erasure probability {p_e} outside [0, 1]")));
        }
        Ok(Self { samples, p_e, config_digest: config_digest.into() })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn p_e(&self) -> f64 {
        self.p_e
    }

    pub fn config_digest(&self) -> &str {
        &self.config_digest
    }

    pub fn with_p_e(&self, p_e: f64) -> Result<Self, TurbulenceError> {
        Self::new(self.samples.clone(), p_e, self.config_digest.clone())
    }
}

/// Zero with probability `p_e`, otherwise a uniformly chosen stored sample.
pub fn sample_channel<R: Rng + ?Sized>(dist: &TransmissivityDistribution, rng: &mut R) -> f64 {
    let erased = rng.random::<f64>() < dist.p_e;
    let idx = rng.random_range(0..dist.samples.len());
    if erased {
        0.0
    } else {
        dist.samples[idx]
    }
}

/// RNG for sample `index` of a run seeded with `seed`; independent of scheduling.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `count` transmissivities computed in parallel, each from its own stream.
pub fn simulate_ensemble(cfg: &TurbulenceConfig, count: usize, seed: u64) -> Result<Vec<f64>, TurbulenceError> {
    let sim = LinkSimulator::new(cfg)?;
    (0..count)
        .into_par_iter()
        .map(|i| sim.simulate(&mut sample_rng(seed, i as u64)))
        .collect()
}
