use gain_policy::optimal_gain;
use gaussian_engine::{output_noise_k, ChannelSample, CoherentEnsemble, ProtocolParams, SignalAmplitudes};
use nalgebra::{DMatrix, Matrix4};

use crate::entropy::von_neumann_entropy;
use crate::error::EntanglementError;

const CHANNEL_TOL: f64 = 1e-9;

/// Covariance of modes `(M, N)`; `M` is the mode sent through the channel.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeCovariance {
    m: Matrix4<f64>,
}

impl TwoModeCovariance {
    pub fn new(m: Matrix4<f64>) -> Result<Self, EntanglementError> {
        if (m - m.transpose()).abs().max() > 1e-12 * (1.0 + m.abs().max()) {
            return Err(EntanglementError::InvalidCovariance("not symmetric".into()));
        }
        let c = Self { m };
        von_neumann_entropy(&c.dmatrix())?;
        Ok(c)
    }

    pub fn tmsv(r: f64) -> Self {
        let (v, s) = ((2.0 * r).cosh(), (2.0 * r).sinh());
        Self { m: Matrix4::new(v, 0.0, s, 0.0, 0.0, v, 0.0, -s, s, 0.0, v, 0.0, 0.0, -s, 0.0, v) }
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    fn dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_column_slice(4, 4, self.m.as_slice())
    }

    /// Covariance of `N` alone.
    pub fn reduced_n(&self) -> DMatrix<f64> {
        DMatrix::from_fn(2, 2, |i, j| self.m[(2 + i, 2 + j)])
    }

    pub fn entropy(&self) -> Result<f64, EntanglementError> {
        von_neumann_entropy(&self.dmatrix())
    }

    /// `M` sent through a phase-insensitive channel of amplitude gain `amplitude` and added noise `v_add`.
    pub fn through_channel(&self, ch: &EffectiveChannel) -> Self {
        let k = ch.amplitude;
        let mut m = self.m;
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = k * k * self.m[(i, j)] + if i == j { ch.v_add } else { 0.0 };
                m[(i, 2 + j)] = k * self.m[(i, 2 + j)];
                m[(2 + j, i)] = k * self.m[(2 + j, i)];
            }
        }
        Self { m }
    }

    /// `M` replaced by the vacuum.
    pub fn erase_m(&self) -> Self {
        let mut m = Matrix4::identity();
        for i in 0..2 {
            for j in 0..2 {
                m[(2 + i, 2 + j)] = self.m[(2 + i, 2 + j)];
            }
        }
        Self { m }
    }
}

/// Reverse coherent information `S(ρ_N) − S(ρ_MN)` in bits.
pub fn rci(cov: &TwoModeCovariance) -> Result<f64, EntanglementError> {
    Ok(von_neumann_entropy(&cov.reduced_n())? - cov.entropy()?)
}

/// Phase-insensitive Gaussian channel `x → k x + noise`, with `τ = k²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveChannel {
    pub tau_eff: f64,
    pub v_add: f64,
    /// Signed amplitude `k`; its sign is a phase flip and leaves entropies unchanged.
    pub amplitude: f64,
}

impl EffectiveChannel {
    pub fn new(amplitude: f64, v_add: f64) -> Result<Self, EntanglementError> {
        if v_add < -CHANNEL_TOL {
            return Err(EntanglementError::UnphysicalChannel(format!("added noise {v_add}")));
        }
        Ok(Self { tau_eff: amplitude * amplitude, v_add: v_add.max(0.0), amplitude })
    }

    /// Loss-noise channel: `(T, 1 − T + ε)`.
    pub fn loss(t: f64, eps: f64) -> Result<Self, EntanglementError> {
        Self::new(t.sqrt(), 1.0 - t + eps)
    }
}

/// The corrected protocol output seen as a channel on the signal mode, with a TMSV ancilla:
/// gain `(T₊ + g̃T₋)²` and noise `K − (T₊ + g̃T₋)²`.
pub fn effective_channel_from_protocol(p: &ProtocolParams) -> Result<EffectiveChannel, EntanglementError> {
    let a = SignalAmplitudes::new(p).a;
    let k = output_noise_k(p)?;
    EffectiveChannel::new(a, k - a * a)
}

/// Gain used by the protocol for a pattern of erased channels.
fn pattern_gain(erased: [bool; 3], p: &ProtocolParams) -> Result<Option<f64>, EntanglementError> {
    let eta = p.eta();
    Ok(match erased.iter().filter(|&&e| e).count() {
        0 => Some(optimal_gain(p, CoherentEnsemble::default()).map_err(gain_err)?.g_opt),
        1 if erased[0] => Some(-1.0 / eta),
        1 if erased[1] => Some(1.0 / eta),
        1 => Some(optimal_gain(p, CoherentEnsemble::default()).map_err(gain_err)?.g_opt),
        _ => None,
    })
}

fn gain_err(e: gain_policy::GainError) -> EntanglementError {
    match e {
        gain_policy::GainError::Engine(e) => EntanglementError::Engine(e),
        other => EntanglementError::UnphysicalChannel(other.to_string()),
    }
}

/// Concavity bound on the RCI of the protocol over independent erasures:
/// `S(ρ_N) − Σ_k p_k S(ρ_k)` over the eight erasure patterns. Intact channels
/// have transmissivity `t_prime`; the excess noise, efficiency and ancilla
/// squeezing come from `p`, and the shared state is a TMSV with the ancilla's
/// squeezing. Patterns with two or more erasures leave `M` in the vacuum.
pub fn rci_upper_bound(t_prime: f64, p_e: f64, p: &ProtocolParams) -> Result<f64, EntanglementError> {
    let input = TwoModeCovariance::tmsv(p.tmsv.r);
    let s_n = von_neumann_entropy(&input.reduced_n())?;
    let s_lost = input.erase_m().entropy()?;
    let mut mixed = 0.0;
    for bits in 0u8..8 {
        let erased = [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0];
        let n_erased = erased.iter().filter(|&&e| e).count() as i32;
        let prob = p_e.powi(n_erased) * (1.0 - p_e).powi(3 - n_erased);
        if prob == 0.0 {
            continue;
        }
        let t = erased.map(|e| if e { 0.0 } else { t_prime });
        let mut q = *p;
        q.channel = ChannelSample::new(t, p.channel.eps());
        let s = match pattern_gain(erased, &q)? {
            Some(g) => {
                let ch = effective_channel_from_protocol(&q.with_g(g))?;
                input.through_channel(&ch).entropy()?
            }
            None => s_lost,
        };
        mixed += prob * s;
    }
    Ok(s_n - mixed)
}

/// Same bound for direct transmission over one loss-noise channel that is erased with probability `p_e`.
pub fn rci_direct(t_prime: f64, p_e: f64, eps: f64, r: f64) -> Result<f64, EntanglementError> {
    let input = TwoModeCovariance::tmsv(r);
    let s_n = von_neumann_entropy(&input.reduced_n())?;
    let through = input.through_channel(&EffectiveChannel::loss(t_prime, eps)?).entropy()?;
    let lost = input.erase_m().entropy()?;
    Ok(s_n - (1.0 - p_e) * through - p_e * lost)
}
