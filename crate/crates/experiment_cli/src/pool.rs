use rand::Rng;
use rayon::prelude::*;
use turbulence_channel::{excess_noise_model, sample_channel, simulate_ensemble, TransmissivityDistribution};

use crate::cache::{cache_path, read_cache, write_cache, CacheKey};
use crate::config::{ExperimentConfig, PostSelect, ProtocolSection};
use crate::error::CliError;
use crate::streams::point_seed;
use gaussian_engine::ChannelSample;

/// Scenario tag used for turbulence generation, shared by all scenarios so
/// that one cache serves every sweep.
const TURBULENCE_TAG: u64 = 0;

/// Fading samples for one link point, from the cache when present.
pub fn fading_pool(cfg: &ExperimentConfig, distance: f64, aperture: f64) -> Result<Vec<f64>, CliError> {
    if let Some(t) = cfg.link.degenerate_t {
        return Ok(vec![t]);
    }
    let turb = cfg.link.turbulence(distance, aperture);
    let count = cfg.pool_size();
    let probe = CacheKey::new(&turb, count, 0);
    let id = u64::from_str_radix(&probe.digest[..16], 16).expect("hex digest");
    let seed = point_seed(cfg.master_seed, TURBULENCE_TAG, id);
    let key = CacheKey { seed, ..probe };
    let path = cfg.cache_dir.as_ref().map(|d| cache_path(d, &key));
    if let Some(p) = &path {
        if let Some(samples) = read_cache(p, &key)? {
            return Ok(samples);
        }
    }
    if !cfg.link.generate {
        let at = path.map(|p| p.display().to_string()).unwrap_or_else(|| "<no cache dir>".into());
        return Err(CliError::MissingSamples(at));
    }
    let samples = simulate_ensemble(&turb, count, seed)?;
    if let Some(p) = &path {
        write_cache(p, &key, &samples)?;
    }
    Ok(samples)
}

/// Three independent draws from `dist`.
pub fn draw_triple<R: Rng + ?Sized>(dist: &TransmissivityDistribution, rng: &mut R) -> [f64; 3] {
    [sample_channel(dist, rng), sample_channel(dist, rng), sample_channel(dist, rng)]
}

/// Loss channels for a triple under the configured excess-noise rule.
pub fn channel_for(t: [f64; 3], pr: &ProtocolSection) -> ChannelSample {
    let mut eps = match pr.eps_fixed {
        Some(e) => [e; 3],
        None => t.map(excess_noise_model),
    };
    if pr.shared_eps {
        eps = [(eps[0] + eps[1] + eps[2]) / 3.0; 3];
    }
    ChannelSample::new(t, eps)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PostSelected {
    pub triples: Vec<[f64; 3]>,
    pub throughput: f64,
}

/// Keeps realizations with at most one erased channel when the policy asks for it.
pub fn apply_post_selection(samples: &[[f64; 3]], policy: PostSelect) -> PostSelected {
    let triples: Vec<[f64; 3]> = match policy {
        PostSelect::Off => samples.to_vec(),
        PostSelect::AtMostOneErasure => {
            samples.iter().filter(|t| t.iter().filter(|&&x| x == 0.0).count() <= 1).copied().collect()
        }
    };
    let throughput = if samples.is_empty() { 0.0 } else { triples.len() as f64 / samples.len() as f64 };
    PostSelected { triples, throughput }
}

/// `n` triples, sample `i` drawn from its own stream.
pub fn draw_triples(
    dist: &TransmissivityDistribution,
    n: usize,
    stream: impl Fn(u64) -> rand_chacha::ChaCha8Rng + Sync,
) -> Vec<[f64; 3]> {
    (0..n).into_par_iter().map(|i| draw_triple(dist, &mut stream(i as u64))).collect()
}
