use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rustfft::{Fft, FftPlanner};

use crate::config::TurbulenceConfig;
use crate::fft2::{fft2, freq};

/// Modified von Kármán phase spectrum (rad² m²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VonKarman {
    /// `r0^(−5/3) = 0.423 k² Cn² Δz`.
    pub r0_m53: f64,
    pub inner_scale: f64,
    pub outer_scale: f64,
}

impl VonKarman {
    pub fn new(k: f64, cn2_dz: f64, inner_scale: f64, outer_scale: f64) -> Self {
        Self { r0_m53: 0.423 * k * k * cn2_dz, inner_scale, outer_scale }
    }

    pub fn psd(&self, f: f64) -> f64 {
        let fm = 5.92 / (2.0 * PI * self.inner_scale);
        let f0 = 1.0 / self.outer_scale;
        0.023 * self.r0_m53 * (-(f / fm).powi(2)).exp() / (f * f + f0 * f0).powf(11.0 / 6.0)
    }
}

/// FFT phase-screen synthesiser on a fixed square grid.
pub struct ScreenGenerator {
    n: usize,
    dx: f64,
    spectrum: VonKarman,
    subharmonics: usize,
    amp: Vec<f64>,
    ifft: Arc<dyn Fft<f64>>,
}

impl ScreenGenerator {
    pub fn new(n: usize, dx: f64, spectrum: VonKarman, subharmonics: usize) -> Self {
        let df = 1.0 / (n as f64 * dx);
        let mut amp = vec![0.0; n * n];
        for i in 0..n {
            let fy = freq(i, n, dx);
            for j in 0..n {
                let fx = freq(j, n, dx);
                if i == 0 && j == 0 {
                    continue;
                }
                amp[i * n + j] = spectrum.psd(fx.hypot(fy)).sqrt() * df;
            }
        }
        let ifft = FftPlanner::new().plan_fft_inverse(n);
        Self { n, dx, spectrum, subharmonics, amp, ifft }
    }

    pub fn from_config(cfg: &TurbulenceConfig) -> Self {
        let sp = VonKarman::new(cfg.wavenumber(), cfg.cn2 * cfg.slab(), cfg.inner_scale_l0, cfg.outer_scale_big_l0);
        Self::new(cfg.grid_n, cfg.pitch(), sp, cfg.subharmonics)
    }

    pub fn grid_n(&self) -> usize {
        self.n
    }

    /// Draws one screen, row-major, in radians.
    pub fn generate<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let n = self.n;
        if self.spectrum.r0_m53 == 0.0 {
            return vec![0.0; n * n];
        }
        let mut c: Vec<Complex64> = self
            .amp
            .iter()
            .map(|&a| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re * a, im * a)
            })
            .collect();
        let mut scratch = Vec::new();
        fft2(&mut c, n, self.ifft.as_ref(), &mut scratch);
        let mut phase: Vec<f64> = c.iter().map(|v| v.re).collect();
        if self.subharmonics > 0 {
            self.add_subharmonics(&mut phase, rng);
        }
        phase
    }

    fn add_subharmonics<R: Rng + ?Sized>(&self, phase: &mut [f64], rng: &mut R) {
        let n = self.n;
        let side = n as f64 * self.dx;
        let coord: Vec<f64> = (0..n).map(|i| (i as f64 - n as f64 / 2.0) * self.dx).collect();
        let mut low = vec![0.0; n * n];
        for p in 1..=self.subharmonics {
            let df = 1.0 / (3f64.powi(p as i32) * side);
            for a in -1i32..=1 {
                for b in -1i32..=1 {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let (fx, fy) = (a as f64 * df, b as f64 * df);
                    let amp = self.spectrum.psd(fx.hypot(fy)).sqrt() * df;
                    let re: f64 = rng.sample(StandardNormal);
                    let im: f64 = rng.sample(StandardNormal);
                    let c = Complex64::new(re * amp, im * amp);
                    // the plane wave factorises into row and column phasors
                    let ex: Vec<Complex64> =
                        coord.iter().map(|&x| Complex64::from_polar(1.0, 2.0 * PI * fx * x)).collect();
                    for (i, &y) in coord.iter().enumerate() {
                        let cy = c * Complex64::from_polar(1.0, 2.0 * PI * fy * y);
                        let row = &mut low[i * n..(i + 1) * n];
                        for (v, e) in row.iter_mut().zip(&ex) {
                            *v += (cy * e).re;
                        }
                    }
                }
            }
        }
        let mean = low.iter().sum::<f64>() / low.len() as f64;
        for (ph, l) in phase.iter_mut().zip(&low) {
            *ph += l - mean;
        }
    }
}

/// One phase screen for a slab of the configured link.
pub fn generate_phase_screen<R: Rng + ?Sized>(cfg: &TurbulenceConfig, rng: &mut R) -> Vec<f64> {
    ScreenGenerator::from_config(cfg).generate(rng)
}
