use std::path::{Path, PathBuf};

use gaussian_engine::{CoherentEnsemble, SyndromeModel, TmsvParams};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use turbulence_channel::TurbulenceConfig;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scenario {
    FidelitySweep,
    ClassicalSweep,
    NongaussCompare,
    RciSweep,
    TurbulencePdf,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Self::FidelitySweep => "fidelity_sweep",
            Self::ClassicalSweep => "classical_sweep",
            Self::NongaussCompare => "nongauss_compare",
            Self::RciSweep => "rci_sweep",
            Self::TurbulencePdf => "turbulence_pdf",
        }
    }

    pub(crate) fn tag(self) -> u64 {
        match self {
            Self::FidelitySweep => 1,
            Self::ClassicalSweep => 2,
            Self::NongaussCompare => 3,
            Self::RciSweep => 4,
            Self::TurbulencePdf => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PostSelect {
    #[default]
    Off,
    AtMostOneErasure,
}

/// Link geometry and simulation grid. Distances and apertures are swept.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LinkSection {
    pub wavelength: f64,
    pub waist_rt: f64,
    pub cn2: f64,
    pub inner_scale_l0: f64,
    pub outer_scale_big_l0: f64,
    pub distances: Vec<f64>,
    pub apertures: Vec<f64>,
    pub n_screens: usize,
    pub grid_n: usize,
    pub grid_extent: Option<f64>,
    pub subharmonics: usize,
    /// Fading samples per link point; defaults to `n_samples`.
    pub pool_size: Option<usize>,
    /// Replaces the simulated fading by a fixed transmissivity.
    pub degenerate_t: Option<f64>,
    /// Allow simulating fading samples when no cache is found.
    pub generate: bool,
}

impl Default for LinkSection {
    fn default() -> Self {
        let t = TurbulenceConfig::default();
        Self {
            wavelength: t.wavelength,
            waist_rt: t.waist_rt,
            cn2: t.cn2,
            inner_scale_l0: t.inner_scale_l0,
            outer_scale_big_l0: t.outer_scale_big_l0,
            distances: vec![t.distance_l],
            apertures: vec![t.aperture_rd],
            n_screens: t.n_screens,
            grid_n: t.grid_n,
            grid_extent: t.grid_extent,
            subharmonics: t.subharmonics,
            pool_size: None,
            degenerate_t: None,
            generate: true,
        }
    }
}

impl LinkSection {
    pub fn turbulence(&self, distance: f64, aperture: f64) -> TurbulenceConfig {
        TurbulenceConfig {
            wavelength: self.wavelength,
            waist_rt: self.waist_rt,
            cn2: self.cn2,
            inner_scale_l0: self.inner_scale_l0,
            outer_scale_big_l0: self.outer_scale_big_l0,
            distance_l: distance,
            aperture_rd: aperture,
            n_screens: self.n_screens,
            grid_n: self.grid_n,
            grid_extent: self.grid_extent,
            subharmonics: self.subharmonics,
        }
    }

    /// `(distance, aperture)` pairs, distance-major.
    pub fn points(&self) -> Vec<(f64, f64)> {
        self.distances.iter().flat_map(|&l| self.apertures.iter().map(move |&a| (l, a))).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SyndromeChoice {
    #[default]
    Printed,
    Pipeline,
}

impl From<SyndromeChoice> for SyndromeModel {
    fn from(c: SyndromeChoice) -> Self {
        match c {
            SyndromeChoice::Printed => SyndromeModel::Printed,
            SyndromeChoice::Pipeline => SyndromeModel::Pipeline,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ProtocolSection {
    pub r_db: f64,
    pub eta2: f64,
    pub sigma_alpha: f64,
    /// Fixed excess noise; when absent each channel gets `ε_det + 0.01(1 − T)`.
    pub eps_fixed: Option<f64>,
    /// Replace the three per-channel ε by their mean.
    pub shared_eps: bool,
    pub syndrome_model: SyndromeChoice,
    pub ber_target: f64,
}

impl Default for ProtocolSection {
    fn default() -> Self {
        Self {
            r_db: 10.0,
            eta2: 0.9,
            sigma_alpha: 10.0,
            eps_fixed: None,
            shared_eps: false,
            syndrome_model: SyndromeChoice::Printed,
            ber_target: 1e-9,
        }
    }
}

impl ProtocolSection {
    pub fn tmsv(&self) -> TmsvParams {
        TmsvParams::from_db(self.r_db)
    }

    pub fn ensemble(&self) -> Result<CoherentEnsemble, CliError> {
        CoherentEnsemble::new(self.sigma_alpha).map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NongaussSection {
    pub r_db: f64,
    pub t_prime: Vec<f64>,
    /// Mode whose channel is erased (1, 2 or 3); 0 keeps all three at `T′`.
    pub erased_mode: usize,
}

impl Default for NongaussSection {
    fn default() -> Self {
        Self { r_db: 4.7, t_prime: vec![0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0], erased_mode: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RciSection {
    pub r: f64,
    pub eps: f64,
    pub t_prime: Vec<f64>,
}

impl Default for RciSection {
    fn default() -> Self {
        Self {
            r: 2.3,
            eps: turbulence_channel::EPS_DETECTOR,
            t_prime: (0..=10).map(|i| 0.5 + 0.05 * i as f64).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub scenario: Scenario,
    pub p_e_list: Vec<f64>,
    pub n_samples: usize,
    pub master_seed: u64,
    pub post_select: PostSelect,
    pub output_path: PathBuf,
    pub cache_dir: Option<PathBuf>,
    pub histogram_bins: usize,
    pub link: LinkSection,
    pub protocol: ProtocolSection,
    pub nongauss: NongaussSection,
    pub rci: RciSection,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            scenario: Scenario::FidelitySweep,
            p_e_list: vec![0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5],
            n_samples: 2000,
            master_seed: 1,
            post_select: PostSelect::Off,
            output_path: PathBuf::from("out"),
            cache_dir: None,
            histogram_bins: 50,
            link: LinkSection::default(),
            protocol: ProtocolSection::default(),
            nongauss: NongaussSection::default(),
            rci: RciSection::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: Self = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serialises")
    }

    /// SHA-256 of the serialised configuration.
    pub fn digest(&self) -> String {
        format!("{:x}", Sha256::digest(self.to_toml().as_bytes()))
    }

    pub fn pool_size(&self) -> usize {
        self.link.pool_size.unwrap_or(self.n_samples)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::Config(m));
        if self.n_samples == 0 {
            return bad("n_samples must be at least 1".into());
        }
        if let Some(p) = self.p_e_list.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return bad(format!("p_e {p} outside [0, 1]"));
        }
        if self.link.pool_size == Some(0) {
            return bad("pool_size must be at least 1".into());
        }
        if let Some(t) = self.link.degenerate_t {
            if !(0.0..=1.0).contains(&t) {
                return bad(format!("degenerate_t {t} outside [0, 1]"));
            }
        }
        if self.link.distances.is_empty() || self.link.apertures.is_empty() {
            return bad("link needs at least one distance and one aperture".into());
        }
        let pr = &self.protocol;
        if !(pr.eta2 > 0.0 && pr.eta2 <= 1.0) {
            return bad(format!("eta2 {} outside (0, 1]", pr.eta2));
        }
        if !(pr.r_db >= 0.0) {
            return bad(format!("r_db {} is negative", pr.r_db));
        }
        if !(pr.sigma_alpha > 0.0) {
            return bad(format!("sigma_alpha {} must be positive", pr.sigma_alpha));
        }
        if !(pr.ber_target > 0.0 && pr.ber_target < 0.5) {
            return bad(format!("ber_target {} outside (0, 0.5)", pr.ber_target));
        }
        if let Some(e) = pr.eps_fixed {
            if !(e >= 0.0) {
                return bad(format!("eps_fixed {e} is negative"));
            }
        }
        if self.nongauss.erased_mode > 3 {
            return bad(format!("erased_mode {} is not 0..=3", self.nongauss.erased_mode));
        }
        let grids = self.nongauss.t_prime.iter().chain(&self.rci.t_prime);
        if let Some(t) = grids.into_iter().find(|t| !(0.0..=1.0).contains(*t)) {
            return bad(format!("t_prime {t} outside [0, 1]"));
        }
        if self.histogram_bins == 0 {
            return bad("histogram_bins must be at least 1".into());
        }
        Ok(())
    }
}
