use num_complex::Complex64;

use crate::error::EngineError;

/// A CF argument λ.
pub type ComplexArg = Complex64;

/// Squeezing in dB to the squeezing magnitude r (nats).
pub fn db_to_r(db: f64) -> f64 {
    db * std::f64::consts::LN_10 / 20.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentState {
    pub alpha: Complex64,
}

/// Gaussian ensemble of coherent amplitudes, `P(α) ∝ exp(−|α|²/σ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentEnsemble {
    pub sigma_alpha: f64,
}

impl Default for CoherentEnsemble {
    fn default() -> Self {
        Self { sigma_alpha: 10.0 }
    }
}

impl CoherentEnsemble {
    pub fn new(sigma_alpha: f64) -> Result<Self, EngineError> {
        if !(sigma_alpha > 0.0) || !sigma_alpha.is_finite() {
            return Err(EngineError::InvalidParameter(format!(
                "sigma_alpha must be positive, got {sigma_alpha}"
            )));
        }
        Ok(Self { sigma_alpha })
    }
}

/// Two-mode squeezed vacuum with the squeezing phase fixed at π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TmsvParams {
    pub r: f64,
}

impl TmsvParams {
    pub fn new(r: f64) -> Self {
        Self { r }
    }

    pub fn from_db(db: f64) -> Self {
        Self { r: db_to_r(db) }
    }

    pub fn phi(&self) -> f64 {
        std::f64::consts::PI
    }

    /// Quadrature variance `cosh 2r`.
    pub fn v(&self) -> f64 {
        (2.0 * self.r).cosh()
    }

    /// `sinh 2r`, equal to `√(V²−1)`.
    pub fn s(&self) -> f64 {
        (2.0 * self.r).sinh()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSample {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub eps3: f64,
}

impl ChannelSample {
    pub fn new(t: [f64; 3], eps: [f64; 3]) -> Self {
        Self { t1: t[0], t2: t[1], t3: t[2], eps1: eps[0], eps2: eps[1], eps3: eps[2] }
    }

    /// Same excess noise on all three channels.
    pub fn shared(t: [f64; 3], eps: f64) -> Self {
        Self::new(t, [eps; 3])
    }

    pub fn t(&self) -> [f64; 3] {
        [self.t1, self.t2, self.t3]
    }

    pub fn eps(&self) -> [f64; 3] {
        [self.eps1, self.eps2, self.eps3]
    }

    pub fn mean_eps(&self) -> f64 {
        (self.eps1 + self.eps2 + self.eps3) / 3.0
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        for t in self.t() {
            if !(0.0..=1.0).contains(&t) {
                return Err(EngineError::InvalidParameter(format!("transmissivity {t} outside [0,1]")));
            }
        }
        for e in self.eps() {
            if !(e >= 0.0) {
                return Err(EngineError::InvalidParameter(format!("excess noise {e} is negative")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolParams {
    pub channel: ChannelSample,
    pub eta2: f64,
    pub g: f64,
    pub tmsv: TmsvParams,
    pub delta: Complex64,
}

impl ProtocolParams {
    pub fn new(channel: ChannelSample, eta2: f64, g: f64, tmsv: TmsvParams) -> Self {
        Self { channel, eta2, g, tmsv, delta: Complex64::new(0.0, 0.0) }
    }

    pub fn with_g(mut self, g: f64) -> Self {
        self.g = g;
        self
    }

    pub fn with_delta(mut self, delta: Complex64) -> Self {
        self.delta = delta;
        self
    }

    pub fn eta(&self) -> f64 {
        self.eta2.sqrt()
    }

    pub fn g_tilde(&self) -> f64 {
        self.g * self.eta()
    }

    pub fn derived(&self) -> DerivedTransmissivities {
        DerivedTransmissivities::new(&self.channel, self.g_tilde())
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        self.channel.validate()?;
        if !(self.eta2 > 0.0 && self.eta2 <= 1.0) {
            return Err(EngineError::InvalidParameter(format!("eta2 {} outside (0,1]", self.eta2)));
        }
        if !(self.tmsv.r >= 0.0) {
            return Err(EngineError::InvalidParameter(format!("squeezing {} negative", self.tmsv.r)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedTransmissivities {
    pub t_plus: f64,
    pub t_minus: f64,
    pub t_prime: f64,
}

impl DerivedTransmissivities {
    pub fn new(ch: &ChannelSample, g_tilde: f64) -> Self {
        let (s1, s2) = (ch.t1.sqrt(), ch.t2.sqrt());
        let t_prime = 0.5 * ch.t1 * (1.0 + g_tilde).powi(2)
            + 0.5 * ch.t2 * (1.0 - g_tilde).powi(2)
            + ch.t3 * g_tilde * g_tilde;
        Self { t_plus: 0.5 * (s1 + s2), t_minus: 0.5 * (s1 - s2), t_prime }
    }
}
