#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarMax {
    pub x: f64,
    pub f: f64,
}

/// Maximizes `f` on `[lo, hi]`: uniform scan, then golden section inside
/// the bracket around the best scan point until it is narrower than `tol`.
pub fn maximize_scalar(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, n_coarse: usize, tol: f64) -> ScalarMax {
    assert!(lo < hi && n_coarse >= 3);
    let step = (hi - lo) / (n_coarse - 1) as f64;
    let mut best = ScalarMax { x: lo, f: f64::NEG_INFINITY };
    let mut best_i = 0;
    for i in 0..n_coarse {
        let x = if i == n_coarse - 1 { hi } else { lo + step * i as f64 };
        let v = f(x);
        if v > best.f {
            best = ScalarMax { x, f: v };
            best_i = i;
        }
    }
    let mut a = lo + step * best_i.saturating_sub(1) as f64;
    let mut b = (lo + step * (best_i + 1) as f64).min(hi);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    for (x, v) in [(c, fc), (d, fd)] {
        if v > best.f {
            best = ScalarMax { x, f: v };
        }
    }
    best
}
