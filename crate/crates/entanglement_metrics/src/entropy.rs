use nalgebra::{DMatrix, Matrix4, SymmetricEigen};

use crate::error::EntanglementError;

const PHYS_TOL: f64 = 1e-9;

/// `g(ν) = ((ν+1)/2) log₂((ν+1)/2) − ((ν−1)/2) log₂((ν−1)/2)`, with `g(1) = 0`.
pub fn g_entropy(nu: f64) -> f64 {
    let p = 0.5 * (nu + 1.0);
    let m = 0.5 * (nu - 1.0);
    let t = |x: f64| if x > 0.0 { x * x.log2() } else { 0.0 };
    t(p) - t(m)
}

fn omega(n: usize) -> DMatrix<f64> {
    let mut o = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        o[(2 * k, 2 * k + 1)] = 1.0;
        o[(2 * k + 1, 2 * k)] = -1.0;
    }
    o
}

/// Symplectic spectrum from the eigenvalues of `σ^{1/2} Ωᵀ σ Ω σ^{1/2}`, each `ν²` appearing twice.
pub fn symplectic_eigenvalues(cov: &DMatrix<f64>) -> Result<Vec<f64>, EntanglementError> {
    let dim = cov.nrows();
    if dim == 0 || dim % 2 != 0 || cov.ncols() != dim {
        return Err(EntanglementError::InvalidCovariance(format!("{}×{} is not 2n×2n", dim, cov.ncols())));
    }
    if let Some(nu) = standard_form_spectrum(cov) {
        return Ok(nu);
    }
    let e = SymmetricEigen::new(cov.clone());
    if e.eigenvalues.iter().any(|&l| !(l > 0.0)) {
        return Err(EntanglementError::InvalidCovariance("not positive definite".into()));
    }
    let root = &e.eigenvectors * DMatrix::from_diagonal(&e.eigenvalues.map(f64::sqrt)) * e.eigenvectors.transpose();
    let o = omega(dim / 2);
    let m = &root * o.transpose() * cov * &o * &root;
    let m = 0.5 * (&m + m.transpose());
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().map(|&x| x.max(0.0).sqrt()).collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev.chunks(2).map(|c| 0.5 * (c[0] + c[1])).collect())
}

/// Closed form for one mode or two modes in the phase-insensitive form
/// `[[a𝟙, cZ], [cZ, b𝟙]]`, which avoids the cancellation of the general route
/// for strongly squeezed states.
fn standard_form_spectrum(cov: &DMatrix<f64>) -> Option<Vec<f64>> {
    let close = |x: f64, y: f64| (x - y).abs() <= 1e-14 * (1.0 + x.abs().max(y.abs()));
    match cov.nrows() {
        2 => {
            if close(cov[(0, 0)], cov[(1, 1)]) && cov[(0, 1)] == 0.0 && cov[(1, 0)] == 0.0 {
                Some(vec![cov[(0, 0)]])
            } else {
                None
            }
        }
        4 => {
            let (a, b, c) = (cov[(0, 0)], cov[(2, 2)], cov[(0, 2)]);
            let pattern = Matrix4::new(a, 0.0, c, 0.0, 0.0, a, 0.0, -c, c, 0.0, b, 0.0, 0.0, -c, 0.0, b);
            let fits = (0..4).all(|i| (0..4).all(|j| close(cov[(i, j)], pattern[(i, j)])));
            if !fits {
                return None;
            }
            let d = ((a + b - 2.0 * c.abs()) * (a + b + 2.0 * c.abs())).max(0.0).sqrt();
            let plus = 0.5 * (d + (a - b).abs());
            // ν₋ν₊ = ab − c², factored to keep precision when a, b ≫ 1
            let gm = (a * b).sqrt();
            Some(vec![(gm - c.abs()) * (gm + c.abs()) / plus, plus])
        }
        _ => None,
    }
}

/// von Neumann entropy in bits of a Gaussian state with covariance `cov` (vacuum = identity).
pub fn von_neumann_entropy(cov: &DMatrix<f64>) -> Result<f64, EntanglementError> {
    let nu = symplectic_eigenvalues(cov)?;
    let mut s = 0.0;
    for &v in &nu {
        if v < 1.0 - PHYS_TOL {
            return Err(EntanglementError::UnphysicalState(v));
        }
        s += g_entropy(v.max(1.0));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_and_thermal() {
        assert_eq!(von_neumann_entropy(&DMatrix::identity(2, 2)).unwrap(), 0.0);
        let th = DMatrix::from_diagonal_element(2, 2, 5.05);
        let direct = 3.025 * 3.025f64.log2() - 2.025 * 2.025f64.log2();
        let s = von_neumann_entropy(&th).unwrap();
        assert!((s - direct).abs() < 1e-12 && (s - 2.7696).abs() < 5e-4, "{s}");
    }

    #[test]
    fn rejects_sub_vacuum_states() {
        let sq = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![0.5, 0.5]));
        assert!(matches!(von_neumann_entropy(&sq), Err(EntanglementError::UnphysicalState(_))));
    }
}
