use gaussian_engine::{vacuum_noise, CoherentEnsemble, ProtocolParams, SignalAmplitudes};
use nalgebra::{Matrix2, SymmetricEigen};
use num_complex::Complex64;

use crate::cf::PolyGaussianCF;
use crate::error::NonGaussError;
use crate::poly::LambdaPoly;
use crate::quadrature::GaussHermite;

const TOL: f64 = 1e-6;
const LEVELS: [usize; 3] = [16, 32, 64];

/// Ensemble fidelity for an arbitrary ancilla,
/// `F = (1/π) ∫ d²λ exp(−κ|λ|²) χ_AB(−bλ, −cλ*)` with
/// `κ = (1+a²)/2 + (1−a)²σ_α + N/2`, where the coherent-state average has
/// been carried out analytically. The λ integral uses tensor Gauss–Hermite
/// rules along the principal axes of the Gaussian part.
pub fn fidelity_numeric(
    ancilla: &PolyGaussianCF,
    p: &ProtocolParams,
    ens: CoherentEnsemble,
) -> Result<f64, NonGaussError> {
    let amp = SignalAmplitudes::new(p);
    let n = vacuum_noise(p)?;
    let kappa = 0.5 * (1.0 + amp.a * amp.a) + (1.0 - amp.a).powi(2) * ens.sigma_alpha + 0.5 * n;
    let zero = Complex64::new(0.0, 0.0);
    let (b, c) = (Complex64::new(-amp.b, 0.0), Complex64::new(-amp.c, 0.0));
    // (ξA, ξA*, ξB, ξB*) = (−bλ, −bλ*, −cλ*, −cλ)
    let map = [(b, zero), (zero, b), (zero, c), (c, zero)];
    let poly = ancilla.poly.restrict(&map).scale(ancilla.norm);
    let quad = ancilla.quad_form.restrict(&map);
    integrate(&poly, &quad, kappa)
}

fn integrate(poly: &LambdaPoly, quad: &LambdaPoly, kappa: f64) -> Result<f64, NonGaussError> {
    let a20 = quad.coeff(2, 0);
    let a11 = quad.coeff(1, 1) - kappa;
    let a02 = quad.coeff(0, 2);
    // exponent as a real form in (x, y): −[x y] M [x y]ᵀ for the real part
    let mxx = -(a20 + a11 + a02).re;
    let myy = -(a11 - a20 - a02).re;
    let mxy = (a20 - a02).im;
    let eig = SymmetricEigen::new(Matrix2::new(mxx, mxy, mxy, myy));
    let (m1, m2) = (eig.eigenvalues[0], eig.eigenvalues[1]);
    if !(m1 > 0.0 && m2 > 0.0) {
        return Err(NonGaussError::QuadratureNotConverged { difference: f64::INFINITY });
    }
    let rot = eig.eigenvectors;
    let exponent = |l: Complex64| a20 * l * l + a11 * l.norm_sqr() + a02 * l.conj() * l.conj();
    let rule = |nodes: usize| {
        let gh = GaussHermite::cached(nodes);
        let mut acc = Complex64::new(0.0, 0.0);
        for (t1, w1) in gh.nodes.iter().zip(&gh.weights) {
            let u1 = t1 / m1.sqrt();
            for (t2, w2) in gh.nodes.iter().zip(&gh.weights) {
                let u2 = t2 / m2.sqrt();
                let x = rot[(0, 0)] * u1 + rot[(0, 1)] * u2;
                let y = rot[(1, 0)] * u1 + rot[(1, 1)] * u2;
                let l = Complex64::new(x, y);
                let phase = Complex64::new(0.0, exponent(l).im).exp();
                acc += w1 * w2 * poly.eval(l) * phase;
            }
        }
        acc.re / (std::f64::consts::PI * (m1 * m2).sqrt())
    };
    let mut prev = rule(LEVELS[0]);
    let mut diff = f64::INFINITY;
    for &n in &LEVELS[1..] {
        let cur = rule(n);
        diff = (cur - prev).abs();
        if diff <= TOL {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(NonGaussError::QuadratureNotConverged { difference: diff })
}
