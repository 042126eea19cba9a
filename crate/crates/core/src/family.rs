//! The general monic family `P = x^n + a1 x^(n-1) + ... + an`, the derived
//! families `Q_k = (n-k) P - x P'` (with `Q_n = P'`), their discriminants
//! `T_k`, and integer samples of the triple-root and Maxwell strata.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::multipoly::{Monomial, Point, Polynomial, VarTable};
use crate::resultant::resultant;

/// Roots are drawn from `-ROOT_BOUND..=ROOT_BOUND`.
pub const ROOT_BOUND: i64 = 20;

/// Degree `n` together with the table `x, a1..an`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    n: usize,
    table: Arc<VarTable>,
}

impl FamilySpec {
    pub fn new(n: usize) -> Result<Self> {
        Self::check_degree(n)?;
        Ok(FamilySpec {
            n,
            table: VarTable::family(n)?,
        })
    }

    /// Coefficients named `a, b, c, ...` instead of `a1, a2, a3, ...`.
    pub fn with_letters(n: usize) -> Result<Self> {
        Self::check_degree(n)?;
        Ok(FamilySpec {
            n,
            table: VarTable::family_letters(n)?,
        })
    }

    fn check_degree(n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("family degree n = {n} must be at least 2")));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn x(&self) -> &str {
        self.table.name(0)
    }

    /// Name of the coefficient `a_j`.
    pub fn coeff(&self, j: usize) -> &str {
        assert!((1..=self.n).contains(&j), "coefficient index {j} out of 1..={}", self.n);
        self.table.name(j)
    }

    pub fn coeff_var(&self, j: usize) -> Polynomial {
        Polynomial::var_at(&self.table, j)
    }

    pub(crate) fn check_k(&self, k: usize) -> Result<()> {
        if !(1..=self.n).contains(&k) {
            return Err(Error::OutOfRange(format!("k = {k} outside 1..={}", self.n)));
        }
        Ok(())
    }

    fn x_power(&self, e: usize) -> Polynomial {
        Polynomial::monomial(&self.table, Monomial::var_power(0, e as u16, &self.table), 1)
    }

    /// A univariate polynomial in `x` from integer coefficients, leading first.
    pub fn univariate(&self, coeffs: &[BigInt]) -> Polynomial {
        let deg = coeffs.len().saturating_sub(1);
        let terms = coeffs.iter().enumerate().map(|(i, c)| {
            let mut e = vec![0u16; self.table.len()];
            e[0] = (deg - i) as u16;
            (e, c.clone())
        });
        Polynomial::from_terms(&self.table, terms)
    }

    pub fn general_family(&self) -> Polynomial {
        let mut p = self.x_power(self.n);
        for j in 1..=self.n {
            p = &p + &(&self.x_power(self.n - j) * &self.coeff_var(j));
        }
        p
    }

    /// `Q_k = (n-k) P - x P'` for `k < n` and `Q_n = P'`.
    pub fn q_family(&self, k: usize) -> Result<Polynomial> {
        self.check_k(k)?;
        let p = self.general_family();
        let dp = p.derivative_at(0);
        if k == self.n {
            return Ok(dp);
        }
        let scaled = p.scale(&BigInt::from(self.n - k));
        Ok(&scaled - &(&self.x_power(1) * &dp))
    }

    /// `T_k`: the primitive part of `Res(Q_k, Q_k', x)`, divided by `a_n`
    /// when `k = n-1`.
    pub fn v_poly(&self, k: usize) -> Result<Polynomial> {
        self.check_k(k)?;
        if self.n < 3 {
            return Err(Error::OutOfRange(format!("T_k needs n >= 3, got n = {}", self.n)));
        }
        let q = self.q_family(k)?;
        let dq = q.derivative_at(0);
        let mut res = resultant(&q, &dq, self.x())?;
        if k == self.n - 1 {
            res = res.exact_div(&self.coeff_var(self.n))?;
        }
        res.primitive_part()
    }

    /// The point `a_j = coeffs[j-1]`.
    pub fn coefficient_point(&self, coeffs: &[BigInt]) -> Point {
        assert_eq!(coeffs.len(), self.n, "expected {} coefficients", self.n);
        (1..=self.n)
            .map(|j| (self.coeff(j).to_string(), coeffs[j - 1].clone()))
            .collect()
    }

    /// The projection onto `a^k`: the same point with `a_k` left unassigned.
    pub fn projected_point(&self, coeffs: &[BigInt], k: usize) -> Point {
        let mut p = self.coefficient_point(coeffs);
        p.remove(self.coeff(k));
        p
    }
}

/// Root multiplicities, one entry per distinct root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPattern {
    multiplicities: Vec<usize>,
}

impl RootPattern {
    pub fn new(multiplicities: Vec<usize>) -> Result<Self> {
        if multiplicities.is_empty() || multiplicities.contains(&0) {
            return Err(Error::InvalidPattern(format!(
                "multiplicities must be positive, got {multiplicities:?}"
            )));
        }
        Ok(RootPattern { multiplicities })
    }

    fn padded(n: usize, head: &[usize]) -> Result<Self> {
        let used: usize = head.iter().sum();
        if used > n {
            return Err(Error::InvalidPattern(format!("{head:?} does not fit degree {n}")));
        }
        let mut m = head.to_vec();
        m.extend(std::iter::repeat_n(1, n - used));
        Self::new(m)
    }

    /// `[3, 1, ..., 1]`: the triple-root stratum.
    pub fn triple(n: usize) -> Result<Self> {
        Self::padded(n, &[3])
    }

    /// `[2, 2, 1, ..., 1]`: two distinct double roots (Maxwell stratum).
    pub fn maxwell(n: usize) -> Result<Self> {
        Self::padded(n, &[2, 2])
    }

    /// `n` simple roots.
    pub fn simple(n: usize) -> Result<Self> {
        Self::padded(n, &[])
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn degree(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }
}

/// Integer roots with multiplicities and the coefficients `a1..an` of
/// `prod (x - z_i)^{m_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataSample {
    pub roots: Vec<i64>,
    pub pattern: RootPattern,
    pub coeffs: Vec<BigInt>,
}

/// Expands `prod (x - z_i)^{m_i}` and returns `a1..an`.
pub fn coeffs_from_roots(roots: &[i64], pattern: &RootPattern) -> Result<Vec<BigInt>> {
    if roots.len() != pattern.len() {
        return Err(Error::InvalidPattern(format!(
            "{} roots for {} pattern slots",
            roots.len(),
            pattern.len()
        )));
    }
    for (i, z) in roots.iter().enumerate() {
        if roots[..i].contains(z) {
            return Err(Error::InvalidPattern(format!("root {z} repeated across slots")));
        }
    }
    let mut poly = vec![BigInt::one()];
    for (&z, &m) in roots.iter().zip(pattern.multiplicities()) {
        let z = BigInt::from(z);
        for _ in 0..m {
            // multiply by (x - z), coefficients leading first
            let mut next = poly.clone();
            next.push(BigInt::zero());
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] -= &z * c;
            }
            poly = next;
        }
    }
    let coeffs = poly[1..].to_vec();
    verify_root_structure(&poly, roots, pattern);
    Ok(coeffs)
}

/// Checks `P^(j)(z_i) = 0` for `j < m_i` directly from the coefficients.
fn verify_root_structure(poly: &[BigInt], roots: &[i64], pattern: &RootPattern) {
    for (&z, &m) in roots.iter().zip(pattern.multiplicities()) {
        let z = BigInt::from(z);
        let mut d = poly.to_vec();
        for j in 0..m {
            let value = d.iter().fold(BigInt::zero(), |acc, c| acc * &z + c);
            assert!(value.is_zero(), "derivative {j} does not vanish at root {z}");
            let deg = d.len() - 1;
            d = d[..deg]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(deg - i))
                .collect();
        }
    }
}

/// `count` samples with distinct roots in `[-20, 20]`, deterministic in
/// `seed`.
pub fn sample_stratum(n: usize, pattern: &RootPattern, count: usize, seed: u64) -> Result<Vec<StrataSample>> {
    if pattern.degree() != n {
        return Err(Error::InvalidPattern(format!(
            "pattern {:?} has degree {} but n = {n}",
            pattern.multiplicities(),
            pattern.degree()
        )));
    }
    let pool: Vec<i64> = (-ROOT_BOUND..=ROOT_BOUND).collect();
    if pattern.len() > pool.len() {
        return Err(Error::InvalidPattern("more distinct roots than the sampling range holds".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let roots: Vec<i64> = pool.choose_multiple(&mut rng, pattern.len()).copied().collect();
            let coeffs = coeffs_from_roots(&roots, pattern)?;
            Ok(StrataSample {
                roots,
                pattern: pattern.clone(),
                coeffs,
            })
        })
        .collect()
}

/// Coefficients of `P(x + h)` for the monic `P` with coefficients `a`.
pub fn shift_coeffs(a: &[BigInt], h: &BigInt) -> Vec<BigInt> {
    let n = a.len();
    let mut c: Vec<BigInt> = std::iter::once(BigInt::one()).chain(a.iter().cloned()).collect();
    for i in 0..n {
        for j in 1..=(n - i) {
            let step = h * &c[j - 1];
            c[j] += step;
        }
    }
    c.remove(0);
    c
}

/// Coefficients (leading first) of `x^n P(1/x)`, i.e. `an x^n + ... + a1 x + 1`.
pub fn reverse_family(a: &[BigInt]) -> Result<Vec<BigInt>> {
    match a.last() {
        Some(an) if !an.is_zero() => {}
        _ => return Err(Error::OutOfRange("reversal needs a_n != 0".into())),
    }
    Ok(a.iter().rev().cloned().chain(std::iter::once(BigInt::one())).collect())
}
