use num_complex::Complex64;
use rand::Rng;

use crate::config::TurbulenceConfig;
use crate::error::TurbulenceError;
use crate::propagate::{gaussian_field, power, Propagator};
use crate::screen::ScreenGenerator;

const EDGE_PIXELS: usize = 2;
const EDGE_LIMIT: f64 = 1e-4;
const SUPERSAMPLE: usize = 16;

/// Split-step link simulator with plans and masks built once.
pub struct LinkSimulator {
    cfg: TurbulenceConfig,
    screens: ScreenGenerator,
    prop: Propagator,
    launch: Vec<Complex64>,
    launch_power: f64,
    aperture: Vec<f64>,
}

impl LinkSimulator {
    pub fn new(cfg: &TurbulenceConfig) -> Result<Self, TurbulenceError> {
        cfg.validate()?;
        let n = cfg.grid_n;
        let dx = cfg.pitch();
        let launch = gaussian_field(n, dx, cfg.waist_rt);
        let launch_power = power(&launch);
        Ok(Self {
            cfg: cfg.clone(),
            screens: ScreenGenerator::from_config(cfg),
            prop: Propagator::from_config(cfg),
            launch,
            launch_power,
            aperture: aperture_mask(n, dx, cfg.aperture_rd),
        })
    }

    pub fn config(&self) -> &TurbulenceConfig {
        &self.cfg
    }

    /// Receiver-plane field after all slabs.
    pub fn receiver_field<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Complex64> {
        let mut field = self.launch.clone();
        let mut scratch = Vec::new();
        let dz = self.cfg.slab();
        // screens sit at slab midpoints
        self.prop.propagate(&mut field, 0.5 * dz, &mut scratch);
        for s in 0..self.cfg.n_screens {
            let phase = self.screens.generate(rng);
            for (v, &ph) in field.iter_mut().zip(&phase) {
                *v *= Complex64::from_polar(1.0, ph);
            }
            let step = if s + 1 == self.cfg.n_screens { 0.5 * dz } else { dz };
            self.prop.propagate(&mut field, step, &mut scratch);
        }
        field
    }

    /// Fraction of launched power collected by the receiver aperture.
    pub fn transmissivity_of(&self, field: &[Complex64]) -> Result<f64, TurbulenceError> {
        let total = power(field);
        let edge = edge_power(field, self.cfg.grid_n) / total;
        if edge > EDGE_LIMIT {
            return Err(TurbulenceError::GridUndersampled { fraction: edge });
        }
        let captured: f64 = field.iter().zip(&self.aperture).map(|(v, &w)| w * v.norm_sqr()).sum();
        Ok((captured / self.launch_power).clamp(0.0, 1.0))
    }

    pub fn simulate<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<f64, TurbulenceError> {
        let f = self.receiver_field(rng);
        self.transmissivity_of(&f)
    }
}

/// One transmissivity draw for the configured link.
pub fn simulate_transmissivity<R: Rng + ?Sized>(cfg: &TurbulenceConfig, rng: &mut R) -> Result<f64, TurbulenceError> {
    LinkSimulator::new(cfg)?.simulate(rng)
}

fn edge_power(field: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            let near = i < EDGE_PIXELS || j < EDGE_PIXELS || i >= n - EDGE_PIXELS || j >= n - EDGE_PIXELS;
            if near {
                s += field[i * n + j].norm_sqr();
            }
        }
    }
    s
}

/// Area fraction of each pixel inside a centred disc of radius `rd`.
fn aperture_mask(n: usize, dx: f64, rd: f64) -> Vec<f64> {
    let c = |i: usize| (i as f64 - n as f64 / 2.0) * dx;
    let half_diag = dx * std::f64::consts::FRAC_1_SQRT_2;
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let r = c(i).hypot(c(j));
            m[i * n + j] = if r + half_diag <= rd {
                1.0
            } else if r - half_diag >= rd {
                0.0
            } else {
                let mut hit = 0usize;
                for a in 0..SUPERSAMPLE {
                    for b in 0..SUPERSAMPLE {
                        let y = c(i) + ((a as f64 + 0.5) / SUPERSAMPLE as f64 - 0.5) * dx;
                        let x = c(j) + ((b as f64 + 0.5) / SUPERSAMPLE as f64 - 0.5) * dx;
                        if x.hypot(y) <= rd {
                            hit += 1;
                        }
                    }
                }
                hit as f64 / (SUPERSAMPLE * SUPERSAMPLE) as f64
            };
        }
    }
    m
}
