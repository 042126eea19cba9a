mod support;

use num_bigint::BigInt;
use redisc_core::{big_discriminant, factor_pipeline, tilde_d, FamilySpec, PipelineOptions, Polynomial};
use support::{printed, QUARTIC_FACTORS, R3, R4};

#[test]
fn cubic_discriminant_and_repeated_discriminants() {
    let fam = FamilySpec::with_letters(3).unwrap();
    let p = |s: &str| printed(s, fam.table());
    assert_eq!(big_discriminant(&fam), p(R3));
    let c = p("c");
    assert_eq!(tilde_d(&fam, 1).unwrap(), (&c * &p("b^3-27c^2").pow(3)).scale(&BigInt::from(-64)));
    assert_eq!(tilde_d(&fam, 2).unwrap(), (&c * &p("a^3-27c").pow(3)).scale(&BigInt::from(-64)));
    assert_eq!(tilde_d(&fam, 3).unwrap(), p("-3b+a^2").pow(3).scale(&BigInt::from(-432)));
}

#[test]
fn quartic_discriminant_has_sixteen_terms() {
    let fam = FamilySpec::with_letters(4).unwrap();
    let r = big_discriminant(&fam);
    assert_eq!(r, printed(R4, fam.table()));
    assert_eq!(r.num_terms(), 16);
}

#[test]
fn quartic_factorization_matches_published_factors() {
    let fam = FamilySpec::with_letters(4).unwrap();
    let d = Polynomial::var(fam.table(), "d").unwrap();
    for (k, constant, d_exp, m, t) in QUARTIC_FACTORS {
        let (m, t) = (printed(m, fam.table()), printed(t, fam.table()));
        let expected = (&(&m.pow(2) * &t.pow(3)) * &d.pow(d_exp)).scale(&BigInt::from(constant));
        assert_eq!(tilde_d(&fam, k).unwrap(), expected, "k={k}");

        let rep = factor_pipeline(&fam, k, &PipelineOptions::default()).unwrap();
        assert!(rep.passed(), "k={k}: {:?}", rep.failed_checks());
        assert_eq!(rep.m.as_ref(), Some(&m));
        assert_eq!(rep.t.as_ref(), Some(&t));
        assert_eq!(rep.d, d_exp);
        let c = rep.c.unwrap();
        assert!(c.is_integer());
        assert_eq!(c.numerator(), &BigInt::from(constant));
    }
}
