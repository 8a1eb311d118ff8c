use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::config::TurbulenceConfig;
use crate::fft2::{fft2, freq};

/// Angular-spectrum free-space propagator on a square grid.
pub struct Propagator {
    n: usize,
    wavelength: f64,
    f2: Vec<f64>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl Propagator {
    pub fn new(n: usize, dx: f64, wavelength: f64) -> Self {
        let mut f2 = vec![0.0; n * n];
        for i in 0..n {
            let fy = freq(i, n, dx);
            for j in 0..n {
                let fx = freq(j, n, dx);
                f2[i * n + j] = fx * fx + fy * fy;
            }
        }
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        Self { n, wavelength, f2, fwd, inv }
    }

    pub fn from_config(cfg: &TurbulenceConfig) -> Self {
        Self::new(cfg.grid_n, cfg.pitch(), cfg.wavelength)
    }

    /// Propagates `field` (row-major) by `dz` in place; the carrier phase `e^{ik dz}` is dropped.
    pub fn propagate(&self, field: &mut [Complex64], dz: f64, scratch: &mut Vec<Complex64>) {
        assert_eq!(field.len(), self.n * self.n);
        assert!(dz >= 0.0, "negative propagation distance");
        if dz == 0.0 {
            return;
        }
        let k = 2.0 * PI / self.wavelength;
        fft2(field, self.n, self.fwd.as_ref(), scratch);
        let norm = 1.0 / (self.n * self.n) as f64;
        for (v, &f2) in field.iter_mut().zip(&self.f2) {
            let kz2 = k * k - 4.0 * PI * PI * f2;
            let h = if kz2 >= 0.0 {
                // written as a difference to keep precision for small angles
                let phase = -4.0 * PI * PI * f2 / (kz2.sqrt() + k) * dz;
                Complex64::from_polar(norm, phase)
            } else {
                Complex64::new(norm * (-(-kz2).sqrt() * dz).exp(), 0.0)
            };
            *v *= h;
        }
        fft2(field, self.n, self.inv.as_ref(), scratch);
    }
}

/// Single-shot convenience wrapper around [`Propagator`].
pub fn angular_spectrum_propagate(field: &[Complex64], dz: f64, cfg: &TurbulenceConfig) -> Vec<Complex64> {
    let mut out = field.to_vec();
    let mut scratch = Vec::new();
    Propagator::from_config(cfg).propagate(&mut out, dz, &mut scratch);
    out
}

/// Gaussian `exp(−r²/w0²)` centred on the grid.
pub fn gaussian_field(n: usize, dx: f64, w0: f64) -> Vec<Complex64> {
    let c = |i: usize| (i as f64 - n as f64 / 2.0) * dx;
    let mut f = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let r2 = c(i).powi(2) + c(j).powi(2);
            f.push(Complex64::new((-r2 / (w0 * w0)).exp(), 0.0));
        }
    }
    f
}

pub fn power(field: &[Complex64]) -> f64 {
    field.iter().map(|v| v.norm_sqr()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_distance_is_identity() {
        let cfg = TurbulenceConfig { grid_n: 64, ..Default::default() };
        let f = gaussian_field(64, cfg.pitch(), 0.02);
        assert_eq!(angular_spectrum_propagate(&f, 0.0, &cfg), f);
    }
}
