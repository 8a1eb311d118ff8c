use nalgebra::{DMatrix, DVector, Matrix2, Vector2};
use num_complex::Complex64;

use crate::cf::{ArgMap, GaussianCf};
use crate::error::EngineError;
use crate::params::{ComplexArg, DerivedTransmissivities, ProtocolParams};

const RADICAND_SLACK: f64 = 1e-12;

/// Scalings applied to the output argument: the signal sees `a·λ`, the
/// ancilla sees `(b·λ, c·λ*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalAmplitudes {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl SignalAmplitudes {
    pub fn new(p: &ProtocolParams) -> Self {
        let d = p.derived();
        let gt = p.g_tilde();
        Self { a: d.t_plus + gt * d.t_minus, b: d.t_minus + gt * d.t_plus, c: p.channel.t3.sqrt() * gt }
    }
}

/// Variance of the residual vacuum factor of the corrected output. With a
/// shared ε this is `(1+ε)(2g̃²+1) + 2g²(1−η²) − T′`; with per-channel noise
/// each channel contributes `w_j(1+ε_j−T_j)`, `w = ((1+g̃)²/2, (1−g̃)²/2, g̃²)`.
pub fn vacuum_noise(p: &ProtocolParams) -> Result<f64, EngineError> {
    let gt = p.g_tilde();
    let w = [0.5 * (1.0 + gt).powi(2), 0.5 * (1.0 - gt).powi(2), gt * gt];
    let ch = &p.channel;
    let t = ch.t();
    let e = ch.eps();
    let mut n = 2.0 * p.g * p.g * (1.0 - p.eta2);
    for j in 0..3 {
        n += w[j] * (1.0 + e[j] - t[j]);
    }
    if n < 0.0 {
        if n >= -RADICAND_SLACK {
            return Ok(0.0);
        }
        return Err(EngineError::NegativeNoiseVariance(n));
    }
    Ok(n)
}

/// Output CF of the corrected mode for arbitrary signal and ancilla CFs.
pub fn output_cf(
    signal_cf: &dyn Fn(ComplexArg) -> Complex64,
    ancilla_cf: &dyn Fn(ComplexArg, ComplexArg) -> Complex64,
    p: &ProtocolParams,
    lam: ComplexArg,
) -> Result<Complex64, EngineError> {
    let amp = SignalAmplitudes::new(p);
    let n = vacuum_noise(p)?;
    let vac = (-0.5 * n * lam.norm_sqr()).exp();
    Ok(signal_cf(amp.a * lam) * ancilla_cf(amp.b * lam, amp.c * lam.conj()) * vac)
}

/// State of the three modes just before the syndrome measurement:
/// displacement Δ on the ancilla mode sent through channel 2, the encoding
/// beam splitter, per-channel loss and noise, the two decoding beam
/// splitters, and homodyne inefficiency as vacuum ports on modes 2 and 3.
pub fn pre_measurement_state(signal: &GaussianCf, ancilla: &GaussianCf, p: &ProtocolParams) -> GaussianCf {
    assert_eq!(signal.modes(), 1);
    assert_eq!(ancilla.modes(), 2);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let eta = p.eta();
    let ch = &p.channel;
    let t = ch.t();
    let eps = ch.eps();

    let mut st = signal.tensor(ancilla);
    st.displace(1, p.delta);

    let bs = ArgMap::real(&[&[h, h, 0.0], &[h, -h, 0.0], &[0.0, 0.0, 1.0]]);
    st = st.substitute(&bs);

    st = st.substitute(&ArgMap::diag(&[t[0].sqrt(), t[1].sqrt(), t[2].sqrt()]));
    for j in 0..3 {
        st.add_noise(j, 1.0 + eps[j] - t[j]);
    }

    st = st.substitute(&bs);

    let bs3 = ArgMap::real(&[&[1.0, 0.0, 0.0], &[0.0, eta * h, eta * h], &[0.0, eta * h, -eta * h]]);
    st = st.substitute(&bs3);
    st.add_noise(1, 1.0 - eta * eta);
    st.add_noise(2, 1.0 - eta * eta);
    st
}

/// Step-by-step construction of the output CF, used as the reference for
/// [`output_cf`]. Measures p̂ on mode 2 and x̂ on mode 3, applies the
/// displacement `x1 += √2g·x̂3`, `p1 += √2g·p̂2` minus the offset that
/// removes the classical displacement, and averages over outcomes.
pub fn simulate_protocol_steps(
    signal: &GaussianCf,
    ancilla: &GaussianCf,
    p: &ProtocolParams,
    lam: ComplexArg,
) -> Result<Complex64, EngineError> {
    p.validate()?;
    let st = pre_measurement_state(signal, ancilla, p);
    let out = corrected_output(&st, p);
    Ok(out.eval(&[lam]))
}

fn corrected_output(st: &GaussianCf, p: &ProtocolParams) -> GaussianCf {
    let (o, m) = ([0usize, 1], [3usize, 4]);
    let sub = |r: [usize; 2], c: [usize; 2]| {
        Matrix2::new(st.cov[(r[0], c[0])], st.cov[(r[0], c[1])], st.cov[(r[1], c[0])], st.cov[(r[1], c[1])])
    };
    let q_oo = sub(o, o);
    let q_om = sub(o, m);
    let q_mm = sub(m, m);
    let d_o = Vector2::new(st.mean[o[0]], st.mean[o[1]]);
    let d_m = Vector2::new(st.mean[m[0]], st.mean[m[1]]);

    // Outcome-conditioned state displaced by G·m; averaging over the
    // outcome distribution leaves these first and second moments.
    let k = std::f64::consts::SQRT_2 * p.g;
    let gm = Matrix2::new(0.0, k, k, 0.0);
    let cov = q_oo + q_om * gm.transpose() + gm * q_om.transpose() + gm * q_mm * gm.transpose();

    // Syndrome means in units of x̂/2: μ = ηT₊Δ/√2.
    let DerivedTransmissivities { t_plus, t_minus, .. } = p.derived();
    let mu = p.delta * (p.eta() * t_plus / std::f64::consts::SQRT_2);
    let scale = 2.0 * std::f64::consts::SQRT_2 * p.g;
    let offset = Vector2::new(
        -(scale * mu.re + 2.0 * t_minus * p.delta.re),
        -(scale * mu.im + 2.0 * t_minus * p.delta.im),
    );
    let mean = d_o + gm * d_m + offset;
    GaussianCf::new(
        DMatrix::from_row_slice(2, 2, &[cov[(0, 0)], cov[(0, 1)], cov[(1, 0)], cov[(1, 1)]]),
        DVector::from_vec(vec![mean[0], mean[1]]),
    )
}
