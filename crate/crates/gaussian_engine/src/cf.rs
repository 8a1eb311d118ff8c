use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::params::{CoherentState, ComplexArg, TmsvParams};

/// `exp[−|λ|²/2 + λα* − λ*α]`.
pub fn coherent_cf(state: CoherentState, lam: ComplexArg) -> Complex64 {
    let a = state.alpha;
    (-0.5 * lam.norm_sqr() + lam * a.conj() - lam.conj() * a).exp()
}

/// TMSV CF with squeezing phase π: `exp[−(|λ′A|² + |λ′B|²)/2]` where
/// `λ′A = cosh r·λA − sinh r·λB*` and symmetrically for B.
pub fn tmsv_cf(params: TmsvParams, lam_a: ComplexArg, lam_b: ComplexArg) -> Complex64 {
    let (c, s) = (params.r.cosh(), params.r.sinh());
    let pa = c * lam_a - s * lam_b.conj();
    let pb = c * lam_b - s * lam_a.conj();
    Complex64::new((-0.5 * (pa.norm_sqr() + pb.norm_sqr())).exp(), 0.0)
}

/// Linear substitution of CF arguments, `λ_old = A·λ_new + B·conj(λ_new)`.
#[derive(Debug, Clone)]
pub struct ArgMap {
    pub a: DMatrix<Complex64>,
    pub b: DMatrix<Complex64>,
}

impl ArgMap {
    /// Real-coefficient map with no conjugate part.
    pub fn real(rows: &[&[f64]]) -> Self {
        let n_old = rows.len();
        let n_new = rows[0].len();
        let a = DMatrix::from_fn(n_old, n_new, |i, j| Complex64::new(rows[i][j], 0.0));
        Self { a, b: DMatrix::zeros(n_old, n_new) }
    }

    pub fn diag(d: &[f64]) -> Self {
        let n = d.len();
        let a = DMatrix::from_fn(n, n, |i, j| Complex64::new(if i == j { d[i] } else { 0.0 }, 0.0));
        Self { a, b: DMatrix::zeros(n, n) }
    }

    /// The map acting on quadrature vectors `k_j = (Im λ_j, −Re λ_j)`.
    pub fn to_real(&self) -> DMatrix<f64> {
        let (n_old, n_new) = self.a.shape();
        let mut r = DMatrix::zeros(2 * n_old, 2 * n_new);
        for i in 0..n_old {
            for j in 0..n_new {
                let (a, b) = (self.a[(i, j)], self.b[(i, j)]);
                // Re λ_old = (ar+br)·lr + (bi−ai)·li, Im λ_old = (ai+bi)·lr + (ar−br)·li
                let re_lr = a.re + b.re;
                let re_li = b.im - a.im;
                let im_lr = a.im + b.im;
                let im_li = a.re - b.re;
                // lr = −k_p, li = k_x
                r[(2 * i, 2 * j)] += im_li;
                r[(2 * i, 2 * j + 1)] -= im_lr;
                r[(2 * i + 1, 2 * j)] -= re_li;
                r[(2 * i + 1, 2 * j + 1)] += re_lr;
            }
        }
        r
    }
}

/// Gaussian CF `exp(−½kᵀQk + i dᵀk)` over `k = (Im λ1, −Re λ1, Im λ2, …)`.
/// `Q` is the quadrature covariance and `d` the quadrature mean.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianCf {
    pub cov: DMatrix<f64>,
    pub mean: DVector<f64>,
}

impl GaussianCf {
    pub fn new(cov: DMatrix<f64>, mean: DVector<f64>) -> Self {
        assert_eq!(cov.nrows(), mean.len());
        Self { cov, mean }
    }

    pub fn vacuum(modes: usize) -> Self {
        Self::new(DMatrix::identity(2 * modes, 2 * modes), DVector::zeros(2 * modes))
    }

    pub fn coherent(alpha: Complex64) -> Self {
        Self::new(DMatrix::identity(2, 2), DVector::from_vec(vec![2.0 * alpha.re, 2.0 * alpha.im]))
    }

    /// Single-mode zero-mean thermal state with quadrature variance `var`.
    pub fn thermal(var: f64) -> Self {
        Self::new(DMatrix::identity(2, 2) * var, DVector::zeros(2))
    }

    pub fn tmsv(params: TmsvParams) -> Self {
        let (c, s) = (params.r.cosh(), params.r.sinh());
        let map = ArgMap {
            a: DMatrix::from_row_slice(2, 2, &[c.into(), 0.0.into(), 0.0.into(), c.into()]),
            b: DMatrix::from_row_slice(2, 2, &[0.0.into(), (-s).into(), (-s).into(), 0.0.into()]),
        };
        Self::vacuum(2).substitute(&map)
    }

    pub fn modes(&self) -> usize {
        self.mean.len() / 2
    }

    pub fn quadratures(lam: &[ComplexArg]) -> DVector<f64> {
        DVector::from_iterator(2 * lam.len(), lam.iter().flat_map(|l| [l.im, -l.re]))
    }

    pub fn eval(&self, lam: &[ComplexArg]) -> Complex64 {
        assert_eq!(lam.len(), self.modes());
        let k = Self::quadratures(lam);
        let quad = (k.transpose() * &self.cov * &k)[(0, 0)];
        let lin = self.mean.dot(&k);
        Complex64::new(-0.5 * quad, lin).exp()
    }

    /// CF of the transformed state, `χ′(λ) = χ(Aλ + Bλ*)`.
    pub fn substitute(&self, map: &ArgMap) -> Self {
        let r = map.to_real();
        assert_eq!(r.nrows(), self.mean.len());
        Self::new(r.transpose() * &self.cov * &r, r.transpose() * &self.mean)
    }

    /// Product state, `self` on the leading modes.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n1, n2) = (self.mean.len(), other.mean.len());
        let mut cov = DMatrix::zeros(n1 + n2, n1 + n2);
        cov.view_mut((0, 0), (n1, n1)).copy_from(&self.cov);
        cov.view_mut((n1, n1), (n2, n2)).copy_from(&other.cov);
        let mean = DVector::from_iterator(n1 + n2, self.mean.iter().chain(other.mean.iter()).copied());
        Self::new(cov, mean)
    }

    /// Multiplies by `exp(−var·|λ_mode|²/2)`, i.e. adds isotropic noise.
    pub fn add_noise(&mut self, mode: usize, var: f64) {
        self.cov[(2 * mode, 2 * mode)] += var;
        self.cov[(2 * mode + 1, 2 * mode + 1)] += var;
    }

    /// Applies the displacement `D(Δ)` on one mode.
    pub fn displace(&mut self, mode: usize, delta: Complex64) {
        self.mean[2 * mode] += 2.0 * delta.re;
        self.mean[2 * mode + 1] += 2.0 * delta.im;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coherent_values() {
        let vac = CoherentState { alpha: c(0.0, 0.0) };
        assert_eq!(coherent_cf(vac, c(0.0, 0.0)), c(1.0, 0.0));
        assert!((coherent_cf(vac, c(1.0, 0.0)).re - (-0.5f64).exp()).abs() < 1e-15);
        // α=1, λ=i: λα* − λ*α = i − (−i) = 2i
        let v = coherent_cf(CoherentState { alpha: c(1.0, 0.0) }, c(0.0, 1.0));
        let expect = (-0.5f64).exp() * c(2.0f64.cos(), 2.0f64.sin());
        assert!((v - expect).norm() < 1e-15);
    }

    #[test]
    fn gaussian_matches_direct_forms() {
        let alpha = c(0.4, -1.3);
        let g = GaussianCf::coherent(alpha);
        let t = TmsvParams::new(0.8);
        let gt = GaussianCf::tmsv(t);
        for lam in [c(0.3, 0.1), c(-1.2, 0.7), c(0.0, -0.5)] {
            let d = g.eval(&[lam]) - coherent_cf(CoherentState { alpha }, lam);
            assert!(d.norm() < 1e-14);
            let lb = c(0.2, -0.9) * lam;
            let d2 = gt.eval(&[lam, lb]) - tmsv_cf(t, lam, lb);
            assert!(d2.norm() < 1e-14);
        }
    }

    #[test]
    fn tmsv_reduces_to_vacua() {
        let t = TmsvParams::new(0.0);
        let (a, b) = (c(0.5, 0.2), c(-0.3, 0.9));
        let v = tmsv_cf(t, a, b).re;
        assert!((v - (-0.5 * (a.norm_sqr() + b.norm_sqr())).exp()).abs() < 1e-15);
        assert_eq!(tmsv_cf(TmsvParams::new(1.0), c(0.0, 0.0), c(0.0, 0.0)).re, 1.0);
    }

    #[test]
    fn tmsv_ten_db_anchor() {
        let t = TmsvParams::from_db(10.0);
        let v = tmsv_cf(t, c(1.0, 0.0), c(1.0, 0.0)).re;
        let expect = (-(t.r.cosh() - t.r.sinh()).powi(2)).exp();
        assert!((v - expect).abs() < 1e-14);
    }

    #[test]
    fn conjugate_substitution() {
        // χ(λ*) for a coherent state equals the CF of the conjugated amplitude, mirrored
        let alpha = c(0.7, 0.3);
        let g = GaussianCf::coherent(alpha);
        let map = ArgMap {
            a: DMatrix::from_element(1, 1, c(0.0, 0.0)),
            b: DMatrix::from_element(1, 1, c(1.0, 0.0)),
        };
        let gs = g.substitute(&map);
        let lam = c(0.4, -0.8);
        let d = gs.eval(&[lam]) - g.eval(&[lam.conj()]);
        assert!(d.norm() < 1e-14);
    }
}
