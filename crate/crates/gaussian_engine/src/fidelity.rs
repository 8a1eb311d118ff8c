use crate::error::EngineError;
use crate::params::{CoherentEnsemble, ProtocolParams};
use crate::protocol::{vacuum_noise, SignalAmplitudes};

/// Classical benchmark fidelity for the coherent-state ensemble, used for reporting only.
pub const F_CLASSICAL: f64 = 0.52;

/// Total added variance of the output relative to a unit-variance input:
/// `V(b² + c²) − 2√(V²−1)·bc + a² + N`.
pub fn output_noise_k(p: &ProtocolParams) -> Result<f64, EngineError> {
    let amp = SignalAmplitudes::new(p);
    let (v, s) = (p.tmsv.v(), p.tmsv.s());
    let n = vacuum_noise(p)?;
    Ok(v * (amp.b * amp.b + amp.c * amp.c) - 2.0 * s * amp.b * amp.c + amp.a * amp.a + n)
}

/// Ensemble-averaged fidelity of the protocol with a TMSV ancilla.
pub fn fidelity_coherent_closed(p: &ProtocolParams, ens: CoherentEnsemble) -> Result<f64, EngineError> {
    let amp = SignalAmplitudes::new(p);
    let k = output_noise_k(p)?;
    Ok(2.0 / (2.0 * ens.sigma_alpha * (amp.a - 1.0).powi(2) + k + 1.0))
}

/// Ensemble-averaged fidelity of sending the signal straight through a pure-loss channel.
pub fn fidelity_direct(t: f64, ens: CoherentEnsemble) -> f64 {
    2.0 / (2.0 * ens.sigma_alpha * (t.sqrt() - 1.0).powi(2) + 2.0)
}

/// Mean of [`fidelity_direct`] over transmissivity draws (erasures are zeros).
pub fn total_fidelity_direct(samples: &[f64], ens: CoherentEnsemble) -> f64 {
    if samples.is_empty() {
        return f64::NAN;
    }
    samples.iter().map(|&t| fidelity_direct(t, ens)).sum::<f64>() / samples.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{ChannelSample, TmsvParams};

    #[test]
    fn ideal_channel_is_perfect() {
        let p = ProtocolParams::new(ChannelSample::shared([1.0; 3], 0.0), 1.0, 0.0, TmsvParams::from_db(10.0));
        assert_eq!(fidelity_coherent_closed(&p, CoherentEnsemble::default()).unwrap(), 1.0);
    }

    #[test]
    fn erased_second_channel_anchor() {
        let p = ProtocolParams::new(ChannelSample::shared([1.0, 0.0, 1.0], 0.0), 1.0, 1.0, TmsvParams::from_db(10.0));
        assert!((output_noise_k(&p).unwrap() - 1.2).abs() < 1e-12);
        let f = fidelity_coherent_closed(&p, CoherentEnsemble::default()).unwrap();
        assert!((f - 2.0 / 2.2).abs() < 1e-12, "{f}");
    }

    #[test]
    fn direct_values() {
        let e = CoherentEnsemble::default();
        assert!((fidelity_direct(0.0, e) - 1.0 / 11.0).abs() < 1e-15);
        assert!((fidelity_direct(0.5, e) - 0.538_25).abs() < 1e-5);
        assert!((total_fidelity_direct(&[1.0, 0.0], e) - 0.545_454_545_454).abs() < 1e-9);
    }

    #[test]
    fn zero_gain_equals_direct() {
        let e = CoherentEnsemble::default();
        for t3 in [0.0, 0.4, 1.0] {
            let p = ProtocolParams::new(ChannelSample::shared([0.7, 0.7, t3], 0.0), 1.0, 0.0, TmsvParams::new(0.6));
            let f = fidelity_coherent_closed(&p, e).unwrap();
            assert!((f - fidelity_direct(0.7, e)).abs() < 1e-14);
        }
    }
}
