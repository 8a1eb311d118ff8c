//! Per-realization choice of the corrective gain.

mod search;

pub use search::{maximize_scalar, ScalarMax};

use gaussian_engine::{fidelity_coherent_closed, CoherentEnsemble, EngineError, ProtocolParams};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GainError {
    #[error("fidelity denominator is not convex in the gain (A = {0:.3e})")]
    NonConvex(f64),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GainMethod {
    ClosedForm,
    GridRefine,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainSolution {
    pub g_opt: f64,
    pub f_opt: f64,
    pub method: GainMethod,
}

/// Coefficients of the fidelity denominator `D(g̃) = A g̃² + B g̃ + C`,
/// where `F = 2 / D`. The gain stored in `p` is ignored.
pub fn denominator_coeffs(p: &ProtocolParams, ens: CoherentEnsemble) -> (f64, f64, f64) {
    let ch = &p.channel;
    let d = p.derived();
    let (tp, tm) = (d.t_plus, d.t_minus);
    let (v, s) = (p.tmsv.v(), p.tmsv.s());
    let sig = ens.sigma_alpha;
    let s3 = ch.t3.sqrt();
    let u1 = 1.0 + ch.eps1 - ch.t1;
    let u2 = 1.0 + ch.eps2 - ch.t2;
    let u3 = 1.0 + ch.eps3 - ch.t3;
    let a = 2.0 * sig * tm * tm + v * (tp * tp + ch.t3) - 2.0 * s * s3 * tp
        + tm * tm
        + 0.5 * (u1 + u2)
        + u3
        + 2.0 * (1.0 - p.eta2) / p.eta2;
    let b = 4.0 * sig * (tp - 1.0) * tm + 2.0 * v * tm * tp - 2.0 * s * s3 * tm + 2.0 * tp * tm + (u1 - u2);
    let c = 2.0 * sig * (tp - 1.0).powi(2) + v * tm * tm + tp * tp + 0.5 * (u1 + u2) + 1.0;
    (a, b, c)
}

/// Vertex of the quadratic denominator.
pub fn optimal_gain_closed(p: &ProtocolParams, ens: CoherentEnsemble) -> Result<GainSolution, GainError> {
    let (a, b, _) = denominator_coeffs(p, ens);
    if !(a > 0.0) {
        return Err(GainError::NonConvex(a));
    }
    let g = -b / (2.0 * a) / p.eta();
    let f = fidelity_coherent_closed(&p.with_g(g), ens)?;
    Ok(GainSolution { g_opt: g, f_opt: f, method: GainMethod::ClosedForm })
}

/// Coarse scan (`n_coarse` points) followed by golden-section refinement.
pub fn optimal_gain_numeric(
    fidelity_fn: &dyn Fn(f64) -> f64,
    bounds: (f64, f64),
    n_coarse: usize,
) -> GainSolution {
    let m = maximize_scalar(fidelity_fn, bounds.0, bounds.1, n_coarse, 1e-7);
    GainSolution { g_opt: m.x, f_opt: m.f, method: GainMethod::GridRefine }
}

/// Default numeric search interval `[−3/η, 3/η]`.
pub fn default_bounds(eta: f64) -> (f64, f64) {
    (-3.0 / eta, 3.0 / eta)
}

/// Closed form when the denominator is convex, numeric search otherwise.
pub fn optimal_gain(p: &ProtocolParams, ens: CoherentEnsemble) -> Result<GainSolution, GainError> {
    match optimal_gain_closed(p, ens) {
        Ok(s) => Ok(s),
        Err(GainError::NonConvex(_)) => {
            vacuum_check(p)?;
            let f = |g: f64| fidelity_coherent_closed(&p.with_g(g), ens).unwrap_or(0.0);
            Ok(optimal_gain_numeric(&f, default_bounds(p.eta()), 101))
        }
        Err(e) => Err(e),
    }
}

fn vacuum_check(p: &ProtocolParams) -> Result<(), GainError> {
    gaussian_engine::vacuum_noise(p)?;
    Ok(())
}
