use crate::error::TurbulenceError;

/// Horizontal free-space link and simulation grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TurbulenceConfig {
    pub wavelength: f64,
    pub waist_rt: f64,
    pub cn2: f64,
    pub inner_scale_l0: f64,
    pub outer_scale_big_l0: f64,
    pub distance_l: f64,
    pub aperture_rd: f64,
    pub n_screens: usize,
    pub grid_n: usize,
    /// Side length of the square grid. `None` picks one from the expected
    /// long-term beam size.
    pub grid_extent: Option<f64>,
    pub subharmonics: usize,
}

impl Default for TurbulenceConfig {
    fn default() -> Self {
        Self {
            wavelength: 1550e-9,
            waist_rt: 0.025,
            cn2: 2.47e-13,
            inner_scale_l0: 7.5e-3,
            outer_scale_big_l0: 1.57,
            distance_l: 1000.0,
            aperture_rd: 0.03,
            n_screens: 10,
            grid_n: 512,
            grid_extent: None,
            subharmonics: 3,
        }
    }
}

impl TurbulenceConfig {
    pub fn wavenumber(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.wavelength
    }

    pub fn rayleigh_range(&self) -> f64 {
        std::f64::consts::PI * self.waist_rt * self.waist_rt / self.wavelength
    }

    /// Diffraction-limited beam radius after `z`.
    pub fn beam_radius(&self, z: f64) -> f64 {
        self.waist_rt * (1.0 + (z / self.rayleigh_range()).powi(2)).sqrt()
    }

    /// Slab thickness represented by one screen.
    pub fn slab(&self) -> f64 {
        self.distance_l / self.n_screens as f64
    }

    /// Fried parameter of one slab, plane wave.
    pub fn r0_slab(&self) -> f64 {
        (0.423 * self.wavenumber().powi(2) * self.cn2 * self.slab()).powf(-0.6)
    }

    /// Rough long-term beam radius: diffraction plus turbulent spreading
    /// with the spherical-wave coherence radius.
    pub fn long_term_radius(&self) -> f64 {
        let w = self.beam_radius(self.distance_l);
        if self.cn2 <= 0.0 {
            return w;
        }
        let k = self.wavenumber();
        let rho0 = (0.55 * self.cn2 * k * k * self.distance_l).powf(-0.6);
        let spread = 2.0 * self.distance_l / (k * rho0);
        (w * w + spread * spread).sqrt()
    }

    pub fn extent(&self) -> f64 {
        self.grid_extent.unwrap_or_else(|| {
            let w = self.long_term_radius();
            (10.0 * w).max(3.0 * self.aperture_rd).max(0.3)
        })
    }

    pub fn pitch(&self) -> f64 {
        self.extent() / self.grid_n as f64
    }

    pub fn validate(&self) -> Result<(), TurbulenceError> {
        let pos = [
            ("wavelength", self.wavelength),
            ("waist_rt", self.waist_rt),
            ("inner_scale_l0", self.inner_scale_l0),
            ("outer_scale_L0", self.outer_scale_big_l0),
            ("distance_L", self.distance_l),
            ("aperture_rd", self.aperture_rd),
        ];
        for (name, v) in pos {
            if !(v > 0.0 && v.is_finite()) {
                return Err(TurbulenceError::InvalidConfig(format!("{name} must be positive, got {v}")));
            }
        }
        if self.cn2 < 0.0 {
            return Err(TurbulenceError::InvalidConfig("cn2 must be non-negative".into()));
        }
        if self.n_screens == 0 {
            return Err(TurbulenceError::InvalidConfig("n_screens must be at least 1".into()));
        }
        if !self.grid_n.is_power_of_two() || self.grid_n < 16 {
            return Err(TurbulenceError::InvalidConfig(format!("grid_n {} is not a power of two", self.grid_n)));
        }
        let need = 4.0 * self.beam_radius(self.distance_l);
        if self.extent() < need {
            return Err(TurbulenceError::InvalidConfig(format!(
                "grid extent {:.3} m is below 4·w(L) = {:.3} m",
                self.extent(),
                need
            )));
        }
        Ok(())
    }
}
