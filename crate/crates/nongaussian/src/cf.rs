use num_complex::Complex64;

use crate::poly::{Poly, Var};

/// `norm · P(z) · exp(Q(z))` over `z = (ξA, ξA*, ξB, ξB*)`, with `Q` quadratic.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyGaussianCF {
    pub quad_form: Poly,
    pub poly: Poly,
    pub norm: Complex64,
}

fn cplx(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl PolyGaussianCF {
    pub fn gaussian(quad_form: Poly) -> Self {
        Self { quad_form, poly: Poly::constant(cplx(1.0)), norm: cplx(1.0) }
    }

    /// `exp(−V/2(|ξA|² + |ξB|²) + S/2(ξAξB + ξA*ξB*))`.
    pub fn tmsv(r: f64) -> Self {
        let (v, s) = ((2.0 * r).cosh(), (2.0 * r).sinh());
        let q = Poly::monomial([1, 1, 0, 0], cplx(-0.5 * v))
            .add(&Poly::monomial([0, 0, 1, 1], cplx(-0.5 * v)))
            .add(&Poly::monomial([1, 0, 1, 0], cplx(0.5 * s)))
            .add(&Poly::monomial([0, 1, 0, 1], cplx(0.5 * s)));
        Self::gaussian(q)
    }

    /// `(∂P + P·∂Q)·exp(Q)`; the normalisation constant is kept.
    pub fn wirtinger_derivative(&self, v: Var) -> Self {
        let dq = self.quad_form.derivative(v);
        let poly = self.poly.derivative(v).add(&self.poly.mul(&dq));
        Self { quad_form: self.quad_form.clone(), poly, norm: self.norm }
    }

    /// `∂²/∂ξB∂ξB*`.
    pub fn d2(&self) -> Self {
        self.wirtinger_derivative(Var::XiB).wirtinger_derivative(Var::XiBConj)
    }

    /// Multiplies by `exp(c·|ξB|²)`.
    pub fn mul_exp_b(&self, c: f64) -> Self {
        let quad_form = self.quad_form.add(&Poly::monomial([0, 0, 1, 1], cplx(c)));
        Self { quad_form, poly: self.poly.clone(), norm: self.norm }
    }

    /// Folds a scalar into the polynomial.
    pub fn scale(&self, c: Complex64) -> Self {
        Self { quad_form: self.quad_form.clone(), poly: self.poly.scale(c * self.norm), norm: cplx(1.0) }
    }

    /// Sum of two CFs sharing the same exponent.
    pub fn add(&self, other: &Self) -> Self {
        assert!(same_quad(&self.quad_form, &other.quad_form), "adding CFs with different Gaussian parts");
        let poly = self.poly.scale(self.norm).add(&other.poly.scale(other.norm));
        Self { quad_form: self.quad_form.clone(), poly, norm: cplx(1.0) }
    }

    /// Rescaled so that the value at the origin is one.
    pub fn normalized(&self) -> Self {
        let p0 = self.poly.constant_term();
        Self { quad_form: self.quad_form.clone(), poly: self.poly.clone(), norm: cplx(1.0) / p0 }
    }

    pub fn value_at_origin(&self) -> Complex64 {
        self.norm * self.poly.constant_term()
    }

    pub fn eval_vars(&self, z: &[Complex64; 4]) -> Complex64 {
        self.norm * self.poly.eval(z) * self.quad_form.eval(z).exp()
    }

    pub fn eval(&self, xi_a: Complex64, xi_b: Complex64) -> Complex64 {
        self.eval_vars(&[xi_a, xi_a.conj(), xi_b, xi_b.conj()])
    }
}

fn same_quad(a: &Poly, b: &Poly) -> bool {
    let keys: std::collections::BTreeSet<_> = a.terms().chain(b.terms()).map(|(e, _)| *e).collect();
    keys.iter().all(|&e| {
        let (x, y) = (a.coeff(e), b.coeff(e));
        (x - y).norm() <= 1e-12 * (1.0 + x.norm().max(y.norm()))
    })
}
