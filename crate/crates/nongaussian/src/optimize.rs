use std::cell::RefCell;

use gain_policy::{default_bounds, maximize_scalar, optimal_gain_numeric, GainSolution};
use gaussian_engine::{CoherentEnsemble, ProtocolParams};

use crate::cf::PolyGaussianCF;
use crate::error::NonGaussError;
use crate::fidelity::fidelity_numeric;
use crate::states::{apply_nongauss, sb_cf, NonGaussOp, NonGaussOpKind, SBParams};

const PARAM_SCAN: usize = 33;
const GAIN_SCAN: usize = 41;

/// Non-Gaussian ancilla with one free parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AncillaFamily {
    /// Free parameter `T_κ`.
    Op(NonGaussOpKind),
    /// Free parameter `ϑ`.
    SqueezedBell,
}

impl AncillaFamily {
    pub fn name(self) -> &'static str {
        match self {
            Self::Op(k) => k.name(),
            Self::SqueezedBell => "SB",
        }
    }

    pub fn domain(self) -> (f64, f64) {
        match self {
            Self::Op(_) => (0.01, 0.99),
            Self::SqueezedBell => (0.0, std::f64::consts::FRAC_PI_2),
        }
    }

    pub fn build(self, r: f64, param: f64) -> Result<PolyGaussianCF, NonGaussError> {
        match self {
            Self::Op(kind) => apply_nongauss(NonGaussOp::new(kind, param)?, r),
            Self::SqueezedBell => Ok(sb_cf(SBParams { r, theta: param })),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AncillaOptimum {
    pub param: f64,
    pub g_opt: f64,
    pub f_opt: f64,
}

/// Gain maximising [`fidelity_numeric`] for a fixed ancilla.
pub fn best_gain(
    ancilla: &PolyGaussianCF,
    p: &ProtocolParams,
    ens: CoherentEnsemble,
) -> Result<GainSolution, NonGaussError> {
    let err = RefCell::new(None);
    let f = |g: f64| match fidelity_numeric(ancilla, &p.with_g(g), ens) {
        Ok(v) => v,
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            f64::NEG_INFINITY
        }
    };
    let sol = optimal_gain_numeric(&f, default_bounds(p.eta()), GAIN_SCAN);
    match err.into_inner() {
        Some(e) => Err(e),
        None => Ok(sol),
    }
}

/// Maximises the fidelity over the family parameter, re-optimising the gain at each step.
pub fn optimize_ancilla_param(
    family: AncillaFamily,
    r: f64,
    p: &ProtocolParams,
    ens: CoherentEnsemble,
) -> Result<AncillaOptimum, NonGaussError> {
    let err = RefCell::new(None);
    let gains = RefCell::new(Vec::<(f64, f64)>::new());
    let f = |x: f64| {
        let res = family.build(r, x).and_then(|anc| best_gain(&anc, p, ens));
        match res {
            Ok(s) => {
                gains.borrow_mut().push((x, s.g_opt));
                s.f_opt
            }
            Err(e) => {
                err.borrow_mut().get_or_insert(e);
                f64::NEG_INFINITY
            }
        }
    };
    let (lo, hi) = family.domain();
    let m = maximize_scalar(&f, lo, hi, PARAM_SCAN, 1e-5);
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    let g_opt = gains.borrow().iter().find(|(x, _)| *x == m.x).map(|(_, g)| *g).unwrap_or(f64::NAN);
    Ok(AncillaOptimum { param: m.x, g_opt, f_opt: m.f })
}
