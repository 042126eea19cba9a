use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factorize::pipeline::{factor_pipeline, PipelineOptions};
use crate::factorize::{big_discriminant, qhd, FactorizationReport};
use crate::family::FamilySpec;
use crate::multipoly::{Monomial, Polynomial, RationalConstant};

/// One verified statement, with any recovered nonzero constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCase {
    pub label: String,
    pub pass: bool,
    pub omegas: Vec<RationalConstant>,
    pub witness: Option<String>,
}

impl LemmaCase {
    fn pass(label: impl Into<String>, omegas: Vec<RationalConstant>) -> Self {
        LemmaCase {
            label: label.into(),
            pass: true,
            omegas,
            witness: None,
        }
    }

    fn fail(label: impl Into<String>, witness: impl Into<String>) -> Self {
        LemmaCase {
            label: label.into(),
            pass: false,
            omegas: Vec::new(),
            witness: Some(witness.into()),
        }
    }

    fn compare(label: impl Into<String>, actual: Option<u32>, expected: i64, note: Option<String>) -> Self {
        let ok = actual.is_some_and(|a| a as i64 == expected);
        let mut witness = match actual {
            Some(a) => format!("computed {a}, formula {expected}"),
            None => format!("not quasi-homogeneous, formula {expected}"),
        };
        if let Some(note) = note {
            witness.push_str("; ");
            witness.push_str(&note);
        }
        LemmaCase {
            label: label.into(),
            pass: ok,
            omegas: Vec::new(),
            witness: (!ok).then_some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: String,
    pub n: usize,
    pub cases: Vec<LemmaCase>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

fn power(fam: &FamilySpec, j: usize, e: u32) -> Polynomial {
    Polynomial::monomial(fam.table(), Monomial::var_power(j, e as u16, fam.table()), 1)
}

/// Compares `V_k^{n+1}` restricted to `a_{n+1} = 0` against
/// `a_n^2 V_k^n` (`k <= n-2`), `a_n^3 V_k^n` (`k = n-1`) and
/// `a_{n-1}^3 V_k^n` (`k = n`), and `R^{n+1}` restricted against `a_n^2 R^n`.
pub fn verify_restriction_lemma(n: usize) -> Result<LemmaReport> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("restriction lemma needs n >= 3, got {n}")));
    }
    let low = FamilySpec::new(n)?;
    let high = FamilySpec::new(n + 1)?;
    let top = high.coeff(n + 1);
    let zero = Polynomial::zero(high.table());
    let restrict = |p: &Polynomial| -> Result<Polynomial> { p.substitute(top, &zero)?.reembed(low.table()) };

    let mut cases: Vec<LemmaCase> = (1..=n)
        .into_par_iter()
        .map(|k| -> Result<LemmaCase> {
            let (label, factor) = if k + 2 <= n {
                (format!("V_{k}: a{n}^2 V_{k}^{n}"), power(&low, n, 2))
            } else if k == n - 1 {
                (format!("V_{k}: a{n}^3 V_{k}^{n}"), power(&low, n, 3))
            } else {
                (format!("V_{k}: a{}^3 V_{k}^{n}", n - 1), power(&low, n - 1, 3))
            };
            let restricted = restrict(&high.v_poly(k)?)?;
            let quotient = match restricted.exact_div(&factor) {
                Ok(q) => q,
                Err(e) => return Ok(LemmaCase::fail(label, format!("restriction not divisible: {e}"))),
            };
            if quotient.is_zero() {
                return Ok(LemmaCase::fail(label, "restriction vanishes identically"));
            }
            let expected = low.v_poly(k)?;
            if quotient.primitive_part()? != expected {
                return Ok(LemmaCase::fail(label, "quotient is not a constant multiple of V_k^n"));
            }
            let omega = RationalConstant::new(quotient.signed_content()?, expected.signed_content()?);
            Ok(LemmaCase::pass(label, vec![omega]))
        })
        .collect::<Result<_>>()?;

    let restricted = restrict(&big_discriminant(&high))?;
    let lowered = &big_discriminant(&low) * &power(&low, n, 2);
    let label = format!("R^{}: +-a{n}^2 R^{n}", n + 1);
    cases.push(if restricted == lowered {
        LemmaCase::pass(label, vec![RationalConstant::integer(1)])
    } else if restricted == -&lowered {
        LemmaCase::pass(label, vec![RationalConstant::integer(-1)])
    } else {
        LemmaCase::fail(label, format!("restriction is {restricted}"))
    });

    Ok(LemmaReport {
        lemma: format!("restriction n={n} -> n={}", n + 1),
        n,
        cases,
    })
}

/// Restricts `R` to the coordinate subspace where only `a_k, a_n` (or
/// `a_{n-1}, a_n` for `k = n`) survive and checks for the two-term shape
/// `W1 a_k^n a_n^(n-k-1) + W2 a_n^(n-1)` (resp. `W3 a_n^(n-1) + W4 a_{n-1}^n`).
pub fn verify_specialized_forms(fam: &FamilySpec, k: usize) -> Result<LemmaReport> {
    fam.check_k(k)?;
    let n = fam.n();
    let table = fam.table();
    let (keep, expected): (Vec<usize>, Vec<Monomial>) = if k < n {
        let mut e = vec![0u16; table.len()];
        e[k] = n as u16;
        e[n] += (n - k - 1) as u16;
        (vec![k, n], vec![Monomial::new(&e, table), Monomial::var_power(n, (n - 1) as u16, table)])
    } else {
        (
            vec![n - 1, n],
            vec![
                Monomial::var_power(n, (n - 1) as u16, table),
                Monomial::var_power(n - 1, n as u16, table),
            ],
        )
    };
    let zero = Polynomial::zero(table);
    let mut r = big_discriminant(fam);
    for j in (1..=n).filter(|j| !keep.contains(j)) {
        r = r.substitute(fam.coeff(j), &zero)?;
    }
    let shown: Vec<String> = expected
        .iter()
        .map(|m| Polynomial::monomial(table, *m, 1).to_string())
        .collect();
    let label = format!("k={k}: R -> W*{} + W*{}", shown[0], shown[1]);
    let case = {
        let coeffs: Option<Vec<_>> = expected
            .iter()
            .map(|m| r.terms().find(|(tm, _)| *tm == m).map(|(_, c)| c.clone()))
            .collect();
        match coeffs {
            Some(cs) if r.num_terms() == 2 => LemmaCase::pass(label, cs.into_iter().map(RationalConstant::integer).collect()),
            _ => LemmaCase::fail(label, format!("restricted discriminant is {r}")),
        }
    };
    Ok(LemmaReport {
        lemma: format!("specialized forms n={n}"),
        n,
        cases: vec![case],
    })
}

/// Runs the factorization pipeline for every `k` and checks all six degree
/// formulas.
pub fn verify_qhd(fam: &FamilySpec, opts: &PipelineOptions) -> Result<LemmaReport> {
    let reports = (1..=fam.n())
        .into_par_iter()
        .map(|k| factor_pipeline(fam, k, opts))
        .collect::<Result<Vec<_>>>()?;
    verify_qhd_from_reports(fam, &reports)
}

pub fn verify_qhd_from_reports(fam: &FamilySpec, reports: &[FactorizationReport]) -> Result<LemmaReport> {
    let n = fam.n();
    if n < 3 {
        return Err(Error::OutOfRange(format!("degree formulas need n >= 3, got {n}")));
    }
    let r = big_discriminant(fam);
    let mut cases = vec![LemmaCase::compare("(1) QHD(R)", r.qh_degree().ok(), qhd::r(n), None)];
    for k in 1..=n {
        let t = fam.v_poly(k)?;
        let part = match k {
            _ if k + 2 <= n => "(1)",
            _ if k + 1 == n => "(2)",
            _ => "(3)",
        };
        cases.push(LemmaCase::compare(format!("{part} QHD(V_{k})"), t.qh_degree().ok(), qhd::t(n, k), None));
    }
    for k in 1..=n {
        let dr = r.derivative(fam.coeff(k))?;
        let derived = qhd::r_ak_by_derivative(n, k);
        let note = (qhd::r_ak(n, k) != derived)
            .then(|| format!("the derivative rule QHD(R) - k gives {derived}"));
        cases.push(LemmaCase::compare(format!("(4) QHD(R_a{k})"), dr.qh_degree().ok(), qhd::r_ak(n, k), note));
    }
    for k in 1..=n {
        let Some(rep) = reports.iter().find(|rep| rep.k == k) else {
            cases.push(LemmaCase::fail(format!("(5) QHD(D_{k})"), "no pipeline report"));
            continue;
        };
        cases.push(LemmaCase::compare(
            format!("(5) QHD(D_{k})"),
            rep.d_tilde.qh_degree().ok(),
            qhd::d_tilde(n, k),
            None,
        ));
    }
    if n >= 4 {
        for k in 1..=n {
            let m = reports.iter().find(|rep| rep.k == k).and_then(|rep| rep.m.as_ref());
            cases.push(match m {
                Some(m) => LemmaCase::compare(format!("(6) QHD(M_{k})"), m.qh_degree().ok(), qhd::m(n, k), None),
                None => LemmaCase::fail(format!("(6) QHD(M_{k})"), "M_k was not extracted"),
            });
        }
    }
    Ok(LemmaReport {
        lemma: format!("quasi-homogeneous degrees n={n}"),
        n,
        cases,
    })
}
