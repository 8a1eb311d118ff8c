use gaussian_engine::{CoherentEnsemble, ProtocolParams};
use libm::erfc;
use num_complex::Complex64;

use crate::cf::PolyGaussianCF;
use crate::error::NonGaussError;

/// Characteristic function of the measured `x̂3` outcome,
/// `φ(s) = (Σ c_n sⁿ) exp(−w s²/2 + iμ s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SyndromeMarginal {
    pub coeffs: Vec<Complex64>,
    pub w: f64,
    pub mu: f64,
}

/// The `x̂3` marginal for a real displacement `Δ = delta_mag`.
pub fn syndrome_marginal(
    ancilla: &PolyGaussianCF,
    p: &ProtocolParams,
    ens: CoherentEnsemble,
    delta_mag: f64,
) -> Result<SyndromeMarginal, NonGaussError> {
    p.validate()?;
    let ch = &p.channel;
    let d = p.derived();
    let eta = p.eta();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let zero = Complex64::new(0.0, 0.0);
    let ua = Complex64::new(0.0, eta * d.t_plus * h);
    let ub = Complex64::new(0.0, -eta * ch.t3.sqrt() * h);
    let map = [(ua, zero), (ua.conj(), zero), (ub, zero), (ub.conj(), zero)];
    let coeffs: Vec<Complex64> =
        ancilla.poly.restrict(&map).to_real_line().into_iter().map(|c| c * ancilla.norm).collect();
    let q = ancilla.quad_form.restrict(&map).to_real_line();
    let q2 = q.get(2).copied().unwrap_or_default();
    if q.len() > 3 || q.get(1).is_some_and(|c| c.norm() > 0.0) || q2.im.abs() > 1e-12 * (1.0 + q2.re.abs()) {
        return Err(NonGaussError::InvalidParameter("ancilla marginal is not a centred real Gaussian".into()));
    }
    let u = [1.0 + ch.eps1 - ch.t1, 1.0 + ch.eps2 - ch.t2, 1.0 + ch.eps3 - ch.t3];
    let w = -2.0 * q2.re
        + (1.0 + 2.0 * ens.sigma_alpha) * p.eta2 * d.t_minus * d.t_minus / 2.0
        + p.eta2 * (0.25 * (u[0] + u[1]) + 0.5 * u[2])
        + (1.0 - p.eta2);
    Ok(SyndromeMarginal { coeffs, w, mu: std::f64::consts::SQRT_2 * eta * d.t_plus * delta_mag })
}

impl SyndromeMarginal {
    /// `P(X < 0)`: the Gaussian tail plus derivatives of the normal density,
    /// `Σ_{n≥1} c_n iⁿ φ_w^{(n−1)}(−μ)`.
    pub fn lower_tail(&self) -> f64 {
        let sw = self.w.sqrt();
        let y = -self.mu / sw;
        let c0 = self.coeffs.first().copied().unwrap_or_default();
        let mut total = c0 * 0.5 * erfc(-y / std::f64::consts::SQRT_2);
        let pdf = (-0.5 * y * y).exp() / (2.0 * std::f64::consts::PI * self.w).sqrt();
        // probabilists' Hermite polynomials He_m(y)
        let (mut he_prev, mut he) = (0.0, 1.0);
        let mut ipow = Complex64::new(1.0, 0.0);
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            let m = n - 1;
            if m > 0 {
                let next = y * he - (m as f64 - 1.0) * he_prev;
                he_prev = he;
                he = next;
            }
            ipow *= Complex64::new(0.0, 1.0);
            let deriv = (-1.0f64).powi(m as i32) * sw.powi(-(m as i32)) * he * pdf;
            total += c * ipow * deriv;
        }
        total.re
    }
}

/// Error rate of the sign decision on `x̂3` for an arbitrary ancilla.
pub fn ber_nongauss(
    ancilla: &PolyGaussianCF,
    p: &ProtocolParams,
    ens: CoherentEnsemble,
    delta_mag: f64,
) -> Result<f64, NonGaussError> {
    let m = syndrome_marginal(ancilla, p, ens, delta_mag.abs())?;
    Ok(m.lower_tail().clamp(f64::MIN_POSITIVE, 0.5))
}

/// Smallest `|Δ|` reaching `ber_target`, by bisection.
pub fn required_displacement_nongauss(
    ancilla: &PolyGaussianCF,
    p: &ProtocolParams,
    ens: CoherentEnsemble,
    ber_target: f64,
) -> Result<f64, NonGaussError> {
    if !(ber_target > 0.0 && ber_target < 0.5) {
        return Err(NonGaussError::InvalidParameter(format!("BER target {ber_target} outside (0, 0.5)")));
    }
    let d = p.derived();
    if d.t_plus * p.eta() <= 1e-15 {
        return Err(NonGaussError::Engine(gaussian_engine::EngineError::DegenerateChannel));
    }
    let f = |x: f64| ber_nongauss(ancilla, p, ens, x);
    let (mut lo, mut hi) = (0.0, 1.0);
    while f(hi)? > ber_target {
        lo = hi;
        hi *= 2.0;
        if hi > 1e6 {
            return Err(NonGaussError::InvalidParameter("BER target unreachable".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid)? > ber_target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}
