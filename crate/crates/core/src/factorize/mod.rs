//! Repeated discriminants `D_k = Res(R, dR/da_k, a_k)` of the discriminant
//! `R = Res(P, P', x)` and their certified decomposition
//! `D_k = c_k * a_n^d(n,k) * M_k^2 * T_k^3`.

mod lemmas;
mod pipeline;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::multipoly::{Polynomial, RationalConstant};
use crate::resultant::resultant;

pub use lemmas::{
    verify_qhd, verify_qhd_from_reports, verify_restriction_lemma, verify_specialized_forms, LemmaCase,
    LemmaReport,
};
pub use pipeline::{factor_pipeline, factor_pipeline_from, PipelineOptions};

/// `d(n,k) = min(1, n-k) + max(0, n-k-2)`, the exponent of `a_n` in `D_k`.
pub fn d_exponent(n: usize, k: usize) -> Result<u32> {
    if !(1..=n).contains(&k) {
        return Err(Error::OutOfRange(format!("k = {k} outside 1..={n}")));
    }
    let gap = (n - k) as i64;
    Ok((gap.min(1) + (gap - 2).max(0)) as u32)
}

/// `R = Res(P, P', x)`, a polynomial in `a1..an`.
pub fn big_discriminant(fam: &FamilySpec) -> Polynomial {
    let p = fam.general_family();
    let dp = p.derivative(fam.x()).expect("x is in the family table");
    resultant(&p, &dp, fam.x()).expect("P has positive degree in x")
}

/// `D_k = Res(R, dR/da_k, a_k)`.
pub fn tilde_d(fam: &FamilySpec, k: usize) -> Result<Polynomial> {
    fam.check_k(k)?;
    tilde_d_of(&big_discriminant(fam), fam, k)
}

pub(crate) fn tilde_d_of(r: &Polynomial, fam: &FamilySpec, k: usize) -> Result<Polynomial> {
    let ak = fam.coeff(k);
    let dr = r.derivative(ak)?;
    resultant(r, &dr, ak)
}

/// Closed-form weighted degrees of the objects in the decomposition, as
/// printed in the degree lemma. Values are signed so that small `n` cannot
/// underflow.
pub mod qhd {
    fn n_k(n: usize, k: usize) -> (i64, i64) {
        (n as i64, k as i64)
    }

    pub fn r(n: usize) -> i64 {
        let n = n as i64;
        n * (n - 1)
    }

    pub fn t(n: usize, k: usize) -> i64 {
        let (n, k) = n_k(n, k);
        if k <= n - 2 {
            n * (n - 1)
        } else if k == n - 1 {
            n * (n - 2)
        } else {
            (n - 1) * (n - 2)
        }
    }

    /// The printed values for `dR/da_k`. For `k >= n-1` these disagree with
    /// [`r_ak_by_derivative`].
    pub fn r_ak(n: usize, k: usize) -> i64 {
        let (n, k) = n_k(n, k);
        if k <= n - 2 {
            n * (n - 1) - k
        } else if k == n - 1 {
            n * n - 3 * n + 1
        } else {
            n * n - 4 * n + 2
        }
    }

    /// Differentiating in `a_k` lowers the weighted degree by `k`.
    pub fn r_ak_by_derivative(n: usize, k: usize) -> i64 {
        r(n) - k as i64
    }

    pub fn d_tilde(n: usize, k: usize) -> i64 {
        let (n, k) = n_k(n, k);
        if k < n {
            n * (n - 1) * (n - 1) + n * n * (n - k - 1)
        } else {
            n * (n - 1) * (n - 2)
        }
    }

    pub fn m(n: usize, k: usize) -> i64 {
        let (n, k) = n_k(n, k);
        if k <= n - 2 {
            n * n * n - 3 * n * n + 2 * n - (n * n - n) * (k + 1) / 2
        } else if k == n - 1 {
            n * (n - 2) * (n - 3) / 2
        } else {
            (n - 1) * (n - 2) * (n - 3) / 2
        }
    }
}

/// Weighted degree observed for one factor next to the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QhdCheck {
    pub actual: Option<u32>,
    pub expected: i64,
}

impl QhdCheck {
    pub fn holds(&self) -> bool {
        self.actual.is_some_and(|a| a as i64 == self.expected)
    }
}

/// Outcome of the factorization pipeline for one `(n, k)`.
///
/// Structural failures do not abort the pipeline with an error; they set the
/// corresponding check to `false` and leave a witness. Fields downstream of
/// a failed step stay `None`.
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub n: usize,
    pub k: usize,
    pub d: u32,
    pub d_tilde: Polynomial,
    pub d0: Option<Polynomial>,
    pub c: Option<RationalConstant>,
    pub m: Option<Polynomial>,
    pub t: Option<Polynomial>,
    pub qhd: BTreeMap<String, QhdCheck>,
    pub checks: BTreeMap<String, bool>,
    pub witnesses: Vec<String>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, &ok)| !ok)
            .map(|(name, _)| name.as_str())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse_poly;

    #[test]
    fn d_exponent_values() {
        assert_eq!(d_exponent(4, 1).unwrap(), 2);
        assert_eq!(d_exponent(4, 2).unwrap(), 1);
        assert_eq!(d_exponent(4, 3).unwrap(), 1);
        assert_eq!(d_exponent(4, 4).unwrap(), 0);
        assert_eq!(d_exponent(3, 1).unwrap(), 1);
        assert_eq!(d_exponent(5, 1).unwrap(), 3);
        assert!(d_exponent(4, 0).is_err());
        assert!(d_exponent(4, 5).is_err());
    }

    #[test]
    fn cubic_repeated_discriminants() {
        let fam = FamilySpec::with_letters(3).unwrap();
        let p = |s: &str| parse_poly(s, fam.table()).unwrap();
        let r = big_discriminant(&fam);
        assert_eq!(r, p("4*a^3*c - a^2*b^2 - 18*a*b*c + 4*b^3 + 27*c^2"));
        assert_eq!(r.qh_degree().unwrap() as i64, qhd::r(3));

        let c = p("c");
        let expect_a = (&c * &p("b^3 - 27*c^2").pow(3)).scale(&(-64).into());
        let expect_b = (&c * &p("a^3 - 27*c").pow(3)).scale(&(-64).into());
        let expect_c = p("-3*b + a^2").pow(3).scale(&(-432).into());
        assert_eq!(tilde_d(&fam, 1).unwrap(), expect_a);
        assert_eq!(tilde_d(&fam, 2).unwrap(), expect_b);
        assert_eq!(tilde_d(&fam, 3).unwrap(), expect_c);
        assert_eq!(
            tilde_d(&fam, 3).unwrap().exact_div(&p("-3*b + a^2").pow(3)).unwrap(),
            p("-432")
        );
    }

    #[test]
    fn quadratic_last_coefficient_is_degenerate() {
        let fam = FamilySpec::new(2).unwrap();
        assert!(matches!(tilde_d(&fam, 2), Err(Error::DegreeZero { .. })));
        assert!(tilde_d(&fam, 1).is_ok());
    }

    #[test]
    fn closed_forms_at_n4() {
        assert_eq!(qhd::d_tilde(4, 1), 68);
        assert_eq!(qhd::m(4, 1), 12);
        assert_eq!(qhd::m(4, 2), 6);
        assert_eq!(qhd::m(4, 3), 4);
        assert_eq!(qhd::m(4, 4), 3);
        assert_eq!(qhd::t(4, 3), 8);
        assert_eq!(qhd::d_tilde(4, 4), 24);
        assert_eq!(qhd::r_ak(4, 2), 10);
    }
}
