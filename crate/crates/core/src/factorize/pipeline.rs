use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factorize::{big_discriminant, d_exponent, qhd, tilde_d_of, FactorizationReport, QhdCheck};
use crate::family::{sample_stratum, FamilySpec, RootPattern};
use crate::multipoly::{Monomial, Point, Polynomial, RationalConstant};
use crate::resultant::resultant_eval_oracle;

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub seed: u64,
    /// Samples per stratum for the vanishing checks.
    pub strata_samples: usize,
    /// Random points for the numeric cross-check of the product identity.
    pub oracle_points: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            seed: 1,
            strata_samples: 50,
            oracle_points: 20,
        }
    }
}

/// Computes `D_k` and certifies its decomposition.
pub fn factor_pipeline(fam: &FamilySpec, k: usize, opts: &PipelineOptions) -> Result<FactorizationReport> {
    check_range(fam, k)?;
    let r = big_discriminant(fam);
    let d_tilde = tilde_d_of(&r, fam, k)?;
    Ok(run(fam, k, &r, d_tilde, opts))
}

/// Same as [`factor_pipeline`] for a `D_k` computed elsewhere (e.g. cached).
pub fn factor_pipeline_from(
    fam: &FamilySpec,
    k: usize,
    d_tilde: Polynomial,
    opts: &PipelineOptions,
) -> Result<FactorizationReport> {
    check_range(fam, k)?;
    if !d_tilde.same_table(&fam.general_family()) {
        return Err(Error::TableMismatch);
    }
    let r = big_discriminant(fam);
    Ok(run(fam, k, &r, d_tilde, opts))
}

fn check_range(fam: &FamilySpec, k: usize) -> Result<()> {
    if fam.n() < 3 {
        return Err(Error::OutOfRange(format!(
            "the factorization needs n >= 3, got n = {}",
            fam.n()
        )));
    }
    fam.check_k(k)
}

struct Builder {
    report: FactorizationReport,
}

impl Builder {
    fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.report.checks.insert(name.to_string(), ok);
        if !ok {
            self.report.witnesses.push(format!("{name}: {}", witness()));
        }
        ok
    }

    fn qhd(&mut self, name: &str, poly: &Polynomial, expected: i64) {
        let actual = poly.qh_degree();
        let entry = QhdCheck {
            actual: actual.as_ref().ok().copied(),
            expected,
        };
        let ok = entry.holds();
        self.report.qhd.insert(name.to_string(), entry);
        self.check(&format!("qhd_{name}"), ok, || match actual {
            Ok(a) => format!("weighted degree {a}, expected {expected}"),
            Err(e) => e.to_string(),
        });
    }
}

fn run(fam: &FamilySpec, k: usize, r: &Polynomial, d_tilde: Polynomial, opts: &PipelineOptions) -> FactorizationReport {
    let n = fam.n();
    let d = d_exponent(n, k).expect("k checked");
    let mut b = Builder {
        report: FactorizationReport {
            n,
            k,
            d,
            d_tilde: d_tilde.clone(),
            d0: None,
            c: None,
            m: None,
            t: None,
            qhd: BTreeMap::new(),
            checks: BTreeMap::new(),
            witnesses: Vec::new(),
        },
    };
    let table = fam.table().clone();
    let an = fam.coeff(n);

    if d_tilde.is_zero() {
        b.check("d_exponent", false, || "D_k is the zero polynomial".into());
        return b.report;
    }
    b.qhd("D", &d_tilde, qhd::d_tilde(n, k));

    // (1) strip the a_n power
    let mult = d_tilde.var_multiplicity(an).expect("nonzero");
    b.check("d_exponent", mult as u32 == d, || {
        format!("{an} divides D_k exactly {mult} times, expected {d}")
    });
    let an_power = Polynomial::monomial(&table, Monomial::var_power(n, mult, &table), 1);
    let d0 = d_tilde.exact_div(&an_power).expect("monomial factor of every term");
    let divisible_by: Vec<&str> = (1..=n)
        .map(|i| fam.coeff(i))
        .filter(|v| d0.var_multiplicity(v).expect("nonzero") > 0)
        .collect();
    b.check("d0_free", divisible_by.is_empty(), || {
        format!("D_k^0 is still divisible by {}", divisible_by.join(", "))
    });
    b.report.d0 = Some(d0.clone());

    // (2) T_k and the cube
    let t = match fam.v_poly(k) {
        Ok(t) => t,
        Err(e) => {
            b.check("divisibility", false, || format!("constructing T_k failed: {e}"));
            return b.report;
        }
    };
    b.qhd("T", &t, qhd::t(n, k));
    b.report.t = Some(t.clone());
    let t3 = t.pow(3);
    let h = match d0.exact_div(&t3) {
        Ok(h) => h,
        Err(e) => {
            b.check("divisibility", false, || format!("T_k^3 does not divide D_k^0: {e}"));
            return b.report;
        }
    };
    b.check("divisibility", true, String::new);

    // (3) the square factor
    let hp = h.primitive_part().expect("quotient of nonzero polynomials");
    let m = match hp.poly_sqrt() {
        Ok(m) => m,
        Err(e) => {
            b.check("square", false, || format!("primitive cofactor is not a square: {e}"));
            return b.report;
        }
    };
    b.check("square", true, String::new);
    if n == 3 {
        b.check("m_trivial", m.is_one(), || format!("expected M = 1 for n = 3, got {m}"));
    }
    b.qhd("M", &m, qhd::m(n, k));
    b.report.m = Some(m.clone());
    if n >= 4 {
        // Irreducibility is out of reach; rule out the obvious reducible shapes.
        let shaped = |p: &Polynomial| p.num_terms() > 1 && p.poly_sqrt().is_err();
        b.check("factors_not_squares", shaped(&m) && shaped(&t), || {
            "M_k or T_k is a monomial or a perfect square".into()
        });
    }

    // (4) the constant: content(D0) / content(M^2 T^3), signed by leading terms
    let m2 = m.pow(2);
    let product = &m2 * &t3;
    let num = d0.signed_content().expect("nonzero");
    let den = product.signed_content().expect("nonzero");
    let c = RationalConstant::new(num, den);
    let residual = h.exact_div(&m2).ok().and_then(|q| q.as_constant());
    b.check("residual_constant", residual.as_ref().is_some_and(|q| !q.is_zero() && c.is_integer() && q == c.numerator()), || {
        format!("H / M^2 = {residual:?}, recovered c = {c}")
    });
    let lhs = d_tilde.scale(c.denominator());
    let an_d = Polynomial::monomial(&table, Monomial::var_power(n, d as u16, &table), 1);
    let rhs = (&product * &an_d).scale(c.numerator());
    b.check("reconstruction", lhs == rhs, || {
        "c * a_n^d * M^2 * T^3 - D_k is not the zero polynomial".into()
    });
    b.report.c = Some(c.clone());

    // (5) strata
    let samples = opts.strata_samples;
    let sigma = sample_stratum(n, &RootPattern::triple(n).expect("n >= 3"), samples, opts.seed).expect("valid pattern");
    let bad: Vec<_> = sigma
        .iter()
        .filter(|s| !t.evaluate(&fam.projected_point(&s.coeffs, k)).expect("T lives in a^k").is_zero())
        .map(|s| s.roots.clone())
        .collect();
    b.check("strata_T_vanish", bad.is_empty(), || {
        format!("T_k is nonzero on triple-root samples with roots {bad:?}")
    });
    if n >= 4 {
        let maxwell =
            sample_stratum(n, &RootPattern::maxwell(n).expect("n >= 4"), samples, opts.seed).expect("valid pattern");
        let bad: Vec<_> = maxwell
            .iter()
            .filter(|s| !m.evaluate(&fam.projected_point(&s.coeffs, k)).expect("M lives in a^k").is_zero())
            .map(|s| s.roots.clone())
            .collect();
        b.check("strata_M_vanish", bad.is_empty(), || {
            format!("M_k is nonzero on Maxwell samples with roots {bad:?}")
        });
    }

    // (6) nonvanishing and the numeric cross-check of the identity
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e37_79b9_7f4a_7c15);
    let nonzero_somewhere = |p: &Polynomial, rng: &mut ChaCha8Rng| {
        (0..32).any(|_| !p.evaluate(&random_point(fam, k, rng)).expect("full point").is_zero())
    };
    let t_nonzero = nonzero_somewhere(&t, &mut rng);
    let m_nonzero = nonzero_somewhere(&m, &mut rng);
    b.check("nonvanishing", t_nonzero && m_nonzero, || {
        format!("no nonzero value found (T: {t_nonzero}, M: {m_nonzero})")
    });

    let ak = fam.coeff(k);
    let dr = r.derivative(ak).expect("a_k in table");
    let mut agreed = 0usize;
    let mut attempts = 0usize;
    let mut mismatch = None;
    while agreed < opts.oracle_points && attempts < opts.oracle_points * 10 {
        attempts += 1;
        let point = random_point(fam, k, &mut rng);
        let oracle = match resultant_eval_oracle(r, &dr, ak, &point) {
            Ok(v) => v,
            Err(Error::LeadingCoefficientVanished { .. }) => continue,
            Err(e) => {
                mismatch = Some(format!("oracle failed: {e}"));
                break;
            }
        };
        // d = 0 exactly when k = n, where a_n is the eliminated variable
        let an_power = match point.get(an) {
            Some(v) => num_traits::pow(v.clone(), d as usize),
            None => BigInt::from(1),
        };
        let product_val = an_power
            * num_traits::pow(m.evaluate(&point).expect("full point"), 2)
            * num_traits::pow(t.evaluate(&point).expect("full point"), 3);
        if oracle * c.denominator() != product_val * c.numerator() {
            mismatch = Some(format!("identity fails at {point:?}"));
            break;
        }
        agreed += 1;
    }
    b.check("eval_oracle", mismatch.is_none() && agreed == opts.oracle_points, || {
        mismatch.unwrap_or_else(|| format!("only {agreed} admissible points found"))
    });

    b.report
}

/// A point assigning every coefficient except `a_k`, entries in `[-9, 9]`.
fn random_point(fam: &FamilySpec, k: usize, rng: &mut ChaCha8Rng) -> Point {
    (1..=fam.n())
        .filter(|&j| j != k)
        .map(|j| (fam.coeff(j).to_string(), BigInt::from(rng.gen_range(-9i64..=9))))
        .collect()
}
