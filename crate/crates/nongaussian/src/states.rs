use num_complex::Complex64;

use crate::cf::PolyGaussianCF;
use crate::error::NonGaussError;
use crate::poly::{Poly, Var};

fn cplx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// TMSV mode B sent through a beam splitter of amplitude `t` with the other
/// port integrated against the vacuum kernel:
/// `(1/((1−T)a)) exp(−V/2|ξA|² − k|ξB|² + (S/2 ξA + m ξB*)(S/2 ξA* + m ξB)/a)`
/// with `T = t²`, `k = (1+T)/(2(1−T))`, `m = t/(1−T)`, `a = V/2 + k`.
/// At `t = 1` the splitter is transparent and the TMSV CF is returned.
pub fn kernel_f(r: f64, t: f64) -> Result<PolyGaussianCF, NonGaussError> {
    if t == 1.0 {
        return Ok(PolyGaussianCF::tmsv(r));
    }
    if !(t.abs() < 1.0) {
        return Err(NonGaussError::DivergentKernel(t));
    }
    let tt = t * t;
    let (v, s) = ((2.0 * r).cosh(), (2.0 * r).sinh());
    let k = (1.0 + tt) / (2.0 * (1.0 - tt));
    let m = t / (1.0 - tt);
    let a = 0.5 * v + k;
    let q = Poly::monomial([1, 1, 0, 0], cplx(-0.5 * v + 0.25 * s * s / a))
        .add(&Poly::monomial([0, 0, 1, 1], cplx(-k + m * m / a)))
        .add(&Poly::monomial([1, 0, 1, 0], cplx(0.5 * s * m / a)))
        .add(&Poly::monomial([0, 1, 0, 1], cplx(0.5 * s * m / a)));
    let mut f = PolyGaussianCF::gaussian(q);
    f.norm = cplx(1.0 / ((1.0 - tt) * a));
    Ok(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonGaussOpKind {
    /// Vacuum on the splitter, one photon detected.
    Ps,
    /// One photon on the splitter, none detected.
    Pa,
    /// One photon in, one photon detected.
    Pc,
    /// Subtraction followed by addition.
    PsPa,
    /// Addition followed by subtraction.
    PaPs,
}

impl NonGaussOpKind {
    pub const ALL: [NonGaussOpKind; 5] = [Self::Ps, Self::Pa, Self::Pc, Self::PsPa, Self::PaPs];

    pub fn name(self) -> &'static str {
        match self {
            Self::Ps => "PS",
            Self::Pa => "PA",
            Self::Pc => "PC",
            Self::PsPa => "PS-PA",
            Self::PaPs => "PA-PS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonGaussOp {
    pub kind: NonGaussOpKind,
    pub t_kappa: f64,
}

impl NonGaussOp {
    /// `t_kappa` must lie in `(0, 1]`; sequential operations reuse it on both splitters.
    pub fn new(kind: NonGaussOpKind, t_kappa: f64) -> Result<Self, NonGaussError> {
        if !(t_kappa > 0.0 && t_kappa <= 1.0) {
            return Err(NonGaussError::InvalidParameter(format!("t_kappa {t_kappa} outside (0, 1]")));
        }
        Ok(Self { kind, t_kappa })
    }
}

/// Normalised CF of the TMSV after the heralded operation on mode B.
/// With `E(c) = exp(c|ξB|²)` and `D = ∂²/∂ξB∂ξB*`, constant factors dropped:
/// PS `E(−½) D[E(½) f]`, PA `E(½) D[E(−½) f]`, PC
/// `q² E(½) D{E(−1) D[E(½) f]} − q E(½) ∂_B{E(−1) ∂_B*[E(½) f]} − q E(½) ∂_B*{E(−1) ∂_B[E(½) f]} + f`
/// with `q = (T_κ−1)/T_κ` and `f` at `t = √T_κ`; the sequential operations
/// nest two of these with `f` at `t = T_κ`.
pub fn apply_nongauss(op: NonGaussOp, r: f64) -> Result<PolyGaussianCF, NonGaussError> {
    let tk = op.t_kappa;
    let out = match op.kind {
        NonGaussOpKind::Ps => kernel_f(r, tk.sqrt())?.mul_exp_b(0.5).d2().mul_exp_b(-0.5),
        NonGaussOpKind::Pa => kernel_f(r, tk.sqrt())?.mul_exp_b(-0.5).d2().mul_exp_b(0.5),
        NonGaussOpKind::Pc => {
            let f = kernel_f(r, tk.sqrt())?;
            let q = (tk - 1.0) / tk;
            let inner = f.mul_exp_b(0.5);
            let t1 = inner.d2().mul_exp_b(-1.0).d2().mul_exp_b(0.5).scale(cplx(q * q));
            let t2 = inner
                .wirtinger_derivative(Var::XiBConj)
                .mul_exp_b(-1.0)
                .wirtinger_derivative(Var::XiB)
                .mul_exp_b(0.5)
                .scale(cplx(-q));
            let t3 = inner
                .wirtinger_derivative(Var::XiB)
                .mul_exp_b(-1.0)
                .wirtinger_derivative(Var::XiBConj)
                .mul_exp_b(0.5)
                .scale(cplx(-q));
            t1.add(&t2).add(&t3).add(&f)
        }
        NonGaussOpKind::PsPa => kernel_f(r, tk)?.mul_exp_b(0.5).d2().mul_exp_b(-1.0).d2().mul_exp_b(0.5),
        NonGaussOpKind::PaPs => kernel_f(r, tk)?.mul_exp_b(-0.5).d2().mul_exp_b(1.0).d2().mul_exp_b(-0.5),
    };
    Ok(out.normalized())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SBParams {
    pub r: f64,
    pub theta: f64,
}

/// Squeezed Bell state `S(r)(cos ϑ|00⟩ + sin ϑ|11⟩)`:
/// `exp(−(|ξ′A|²+|ξ′B|²)/2)·[cos²ϑ + cos ϑ sin ϑ(ξ′Aξ′B + ξ′A*ξ′B*) + sin²ϑ(1−|ξ′A|²)(1−|ξ′B|²)]`
/// with `ξ′A = cosh r ξA − sinh r ξB*`, `ξ′B = cosh r ξB − sinh r ξA*`.
pub fn sb_cf(p: SBParams) -> PolyGaussianCF {
    let (ch, sh) = (p.r.cosh(), p.r.sinh());
    let (c, s) = (p.theta.cos(), p.theta.sin());
    let xa = Poly::linear([ch, 0.0, 0.0, -sh]);
    let xac = Poly::linear([0.0, ch, -sh, 0.0]);
    let xb = Poly::linear([0.0, -sh, ch, 0.0]);
    let xbc = Poly::linear([-sh, 0.0, 0.0, ch]);
    let na = xa.mul(&xac);
    let nb = xb.mul(&xbc);
    let quad_form = na.add(&nb).scale(cplx(-0.5));
    let one = Poly::constant(cplx(1.0));
    let poly = Poly::constant(cplx(c * c))
        .add(&xa.mul(&xb).add(&xac.mul(&xbc)).scale(cplx(c * s)))
        .add(&one.add(&na.scale(cplx(-1.0))).mul(&one.add(&nb.scale(cplx(-1.0)))).scale(cplx(s * s)));
    // the bracket is already cos²ϑ + sin²ϑ = 1 at the origin
    PolyGaussianCF { quad_form, poly, norm: cplx(1.0) }.normalized()
}
