use std::collections::BTreeMap;

use num_complex::Complex64;

/// Exponents of `(ξA, ξA*, ξB, ξB*)`.
pub type Exponent = [u8; 4];

/// Variables of a two-mode CF, treated as independent in the Wirtinger sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    XiA = 0,
    XiAConj = 1,
    XiB = 2,
    XiBConj = 3,
}

/// Sparse polynomial in the four CF variables.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponent, Complex64>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn monomial(e: Exponent, c: Complex64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `Σ coeffs[i]·z_i`.
    pub fn linear(coeffs: [f64; 4]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = [0; 4];
            e[i] = 1;
            p.add_term(e, Complex64::new(c, 0.0));
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let v = self.terms.entry(e).or_default();
        *v += c;
        if *v == Complex64::new(0.0, 0.0) {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum()).max().unwrap_or(0)
    }

    pub fn coeff(&self, e: Exponent) -> Complex64 {
        self.terms.get(&e).copied().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeff([0; 4])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(*e, *c);
        }
        p
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut p = Self::zero();
        for (e, v) in &self.terms {
            p.add_term(*e, v * c);
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    pub fn derivative(&self, v: Var) -> Self {
        let i = v as usize;
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut d = *e;
                d[i] -= 1;
                p.add_term(d, c * e[i] as f64);
            }
        }
        p
    }

    pub fn eval(&self, z: &[Complex64; 4]) -> Complex64 {
        let deg = self.terms.keys().flat_map(|e| e.iter()).copied().max().unwrap_or(0) as usize;
        let pows: Vec<Vec<Complex64>> = z
            .iter()
            .map(|&zi| {
                let mut v = Vec::with_capacity(deg + 1);
                let mut acc = Complex64::new(1.0, 0.0);
                for _ in 0..=deg {
                    v.push(acc);
                    acc *= zi;
                }
                v
            })
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| c * pows[0][e[0] as usize] * pows[1][e[1] as usize] * pows[2][e[2] as usize] * pows[3][e[3] as usize])
            .sum()
    }

    /// Substitutes `z_i = u_i·λ + v_i·λ*`.
    pub fn restrict(&self, map: &[(Complex64, Complex64); 4]) -> LambdaPoly {
        let deg = self.terms.keys().flat_map(|e| e.iter()).copied().max().unwrap_or(0) as usize;
        // powers of each linear form, as polynomials in (λ, λ*)
        let lin: Vec<Vec<LambdaPoly>> = map
            .iter()
            .map(|&(u, v)| {
                let base = LambdaPoly::from_terms([((1, 0), u), ((0, 1), v)]);
                let mut out = vec![LambdaPoly::one()];
                for k in 1..=deg {
                    let next = out[k - 1].mul(&base);
                    out.push(next);
                }
                out
            })
            .collect();
        let mut res = LambdaPoly::default();
        for (e, c) in &self.terms {
            let mut m = lin[0][e[0] as usize].mul(&lin[1][e[1] as usize]);
            m = m.mul(&lin[2][e[2] as usize]).mul(&lin[3][e[3] as usize]);
            res = res.add(&m.scale(*c));
        }
        res
    }
}

/// Polynomial in `(λ, λ*)`; key `(i, j)` stands for `λ^i λ*^j`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LambdaPoly {
    terms: BTreeMap<(u8, u8), Complex64>,
}

impl LambdaPoly {
    pub fn one() -> Self {
        Self::from_terms([((0, 0), Complex64::new(1.0, 0.0))])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u8, u8), Complex64)>>(it: I) -> Self {
        let mut p = Self::default();
        for (k, c) in it {
            if c != Complex64::new(0.0, 0.0) {
                *p.terms.entry(k).or_default() += c;
            }
        }
        p
    }

    pub fn coeff(&self, i: u8, j: u8) -> Complex64 {
        self.terms.get(&(i, j)).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u8, u8), &Complex64)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(o.terms.iter()).map(|(k, c)| (*k, *c)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = BTreeMap::new();
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &o.terms {
                *out.entry((i + k, j + l)).or_insert(Complex64::new(0.0, 0.0)) += a * b;
            }
        }
        Self { terms: out }
    }

    pub fn eval(&self, lam: Complex64) -> Complex64 {
        let lc = lam.conj();
        self.terms.iter().map(|((i, j), c)| c * lam.powu(*i as u32) * lc.powu(*j as u32)).sum()
    }

    /// Collapses `λ*` onto `λ` (used when `λ` is real).
    pub fn to_real_line(&self) -> Vec<Complex64> {
        let deg = self.terms.keys().map(|(i, j)| (i + j) as usize).max().unwrap_or(0);
        let mut c = vec![Complex64::new(0.0, 0.0); deg + 1];
        for ((i, j), v) in &self.terms {
            c[(i + j) as usize] += v;
        }
        c
    }
}
