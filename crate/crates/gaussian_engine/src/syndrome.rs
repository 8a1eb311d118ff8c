use libm::erfc;
use statrs::function::erf::erfc_inv;

use crate::cf::GaussianCf;
use crate::error::EngineError;
use crate::params::{CoherentEnsemble, ProtocolParams};
use crate::protocol::pre_measurement_state;

/// Which variance expression to use for the syndrome outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SyndromeModel {
    /// The closed-form expression with `T′` taken at `g̃ = 0` and the mean ε.
    #[default]
    Printed,
    /// Moments read off the Gaussian measurement pipeline.
    Pipeline,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyndromeStats {
    pub mu_x: f64,
    pub mu_p: f64,
    pub sigma_s2: f64,
}

/// Syndrome means `ηT₊Δ/√2` and variance `η²(T₋²σ_α + c2) + 1` with
/// `c2 = V(T₊²/2 + T3/2) − √(V²−1)·T₊√T3 + T₋²/2 + ε − T′/2`.
pub fn syndrome_stats(p: &ProtocolParams, ens: CoherentEnsemble) -> SyndromeStats {
    let ch = &p.channel;
    let d = p.derived();
    let (v, s) = (p.tmsv.v(), p.tmsv.s());
    // the measurement precedes the correction, so T′ carries no gain
    let t_prime = 0.5 * (ch.t1 + ch.t2);
    let eps = ch.mean_eps();
    let c2 = v * (0.5 * d.t_plus * d.t_plus + 0.5 * ch.t3) - s * d.t_plus * ch.t3.sqrt()
        + 0.5 * d.t_minus * d.t_minus
        + (eps - 0.5 * t_prime);
    let eta = p.eta();
    let mu = p.delta * (eta * d.t_plus / std::f64::consts::SQRT_2);
    SyndromeStats {
        mu_x: mu.re,
        mu_p: mu.im,
        sigma_s2: p.eta2 * (d.t_minus * d.t_minus * ens.sigma_alpha + c2) + 1.0,
    }
}

/// Syndrome moments from the measurement pipeline, in units of `x̂/√2`
/// so that [`ber_bpsk`] gives the exact error rate of the sign decision.
pub fn syndrome_stats_pipeline(p: &ProtocolParams, ens: CoherentEnsemble) -> SyndromeStats {
    let signal = GaussianCf::thermal(1.0 + 2.0 * ens.sigma_alpha);
    let ancilla = GaussianCf::tmsv(p.tmsv);
    let st = pre_measurement_state(&signal, &ancilla, p);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    SyndromeStats { mu_x: st.mean[4] * h, mu_p: st.mean[3] * h, sigma_s2: 0.5 * st.cov[(4, 4)] }
}

pub fn syndrome(p: &ProtocolParams, ens: CoherentEnsemble, model: SyndromeModel) -> SyndromeStats {
    match model {
        SyndromeModel::Printed => syndrome_stats(p, ens),
        SyndromeModel::Pipeline => syndrome_stats_pipeline(p, ens),
    }
}

/// `½ erfc(ηT₊|Δ| / √(2σ_s²))`.
pub fn ber_bpsk(delta_mag: f64, s: &SyndromeStats, eta: f64, t_plus: f64) -> f64 {
    0.5 * erfc(eta * t_plus * delta_mag.abs() / (2.0 * s.sigma_s2).sqrt())
}

/// Inverse of [`ber_bpsk`] in `|Δ|`.
pub fn required_displacement(
    ber_target: f64,
    s: &SyndromeStats,
    eta: f64,
    t_plus: f64,
) -> Result<f64, EngineError> {
    if !(ber_target > 0.0 && ber_target < 0.5) {
        return Err(EngineError::InvalidParameter(format!("BER target {ber_target} outside (0, 0.5)")));
    }
    if t_plus <= 1e-15 {
        return Err(EngineError::DegenerateChannel);
    }
    let y = erfc_inv_refined(2.0 * ber_target);
    Ok((2.0 * s.sigma_s2).sqrt() * y / (eta * t_plus))
}

/// `erfc⁻¹` polished with Newton steps on `erfc(y) = z`.
fn erfc_inv_refined(z: f64) -> f64 {
    let mut y = erfc_inv(z);
    for _ in 0..3 {
        let f = erfc(y) - z;
        let df = -2.0 / std::f64::consts::PI.sqrt() * (-y * y).exp();
        if df == 0.0 {
            break;
        }
        y -= f / df;
    }
    y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModulationAxis {
    #[default]
    Real,
    Imag,
}

/// Sign decision on the modulated quadrature; zero decodes to 1.
pub fn decode_bpsk(x_tilde: f64, p_tilde: f64, axis: ModulationAxis) -> u8 {
    let v = match axis {
        ModulationAxis::Real => x_tilde,
        ModulationAxis::Imag => p_tilde,
    };
    u8::from(v >= 0.0)
}
