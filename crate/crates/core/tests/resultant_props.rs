use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use redisc_core::resultant::int_det;
use redisc_core::{
    big_discriminant, det_cofactor, det_fraction_free, resultant, resultant_eval_oracle, Error, FamilySpec, Point,
    PolyMatrix, Polynomial, VarTable,
};

fn table() -> Arc<VarTable> {
    VarTable::new(["x", "u", "v"], [1, 1, 1]).unwrap()
}

/// Sparse entries so that zero pivots and row swaps actually occur.
fn entry() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        2 => Just(Polynomial::zero(&table())),
        1 => (-5i64..=5).prop_map(|c| Polynomial::constant(&table(), c)),
        3 => prop::collection::vec((prop::collection::vec(0u16..=2, 3), -6i64..=6), 1..=3)
            .prop_map(|t| Polynomial::from_terms(&table(), t)),
    ]
}

fn matrix() -> impl Strategy<Value = PolyMatrix> {
    (1usize..=4).prop_flat_map(|dim| {
        prop::collection::vec(prop::collection::vec(entry(), dim), dim)
            .prop_map(|rows| PolyMatrix::new(&table(), rows).unwrap())
    })
}

/// A polynomial of exact degree `deg` in `x` with coefficients in `u, v`.
fn in_x(deg: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u16..=deg, 0u16..=2, 0u16..=2, -7i64..=7), 1..=6).prop_map(move |terms| {
        let mut p = Polynomial::from_terms(&table(), terms.into_iter().map(|(e, a, b, c)| ([e, a, b], c)));
        let lead = Polynomial::from_terms(&table(), [([deg, 0, 0], 1)]);
        if p.degree_in("x").unwrap() != Some(deg) {
            p = &p + &lead;
        }
        p
    })
}

fn point() -> impl Strategy<Value = Point> {
    (-9i64..=9, -9i64..=9).prop_map(|(u, v)| Point::from([("u".into(), BigInt::from(u)), ("v".into(), BigInt::from(v))]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fraction_free_matches_cofactor(m in matrix()) {
        prop_assert_eq!(det_fraction_free(&m), det_cofactor(&m));
    }

    #[test]
    fn determinant_commutes_with_evaluation(m in matrix(), pt in point()) {
        let mut pt = pt;
        pt.insert("x".into(), BigInt::from(3));
        let ints: Vec<Vec<BigInt>> = m
            .rows()
            .iter()
            .map(|r| r.iter().map(|e| e.evaluate(&pt).unwrap()).collect())
            .collect();
        prop_assert_eq!(det_fraction_free(&m).evaluate(&pt).unwrap(), int_det(ints));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn resultant_swap_sign((f, g, df, dg) in (1u16..=3, 1u16..=3)
        .prop_flat_map(|(df, dg)| (in_x(df), in_x(dg), Just(df), Just(dg))))
    {
        let fg = resultant(&f, &g, "x").unwrap();
        let gf = resultant(&g, &f, "x").unwrap();
        if (df * dg) % 2 == 0 {
            prop_assert_eq!(gf, fg);
        } else {
            prop_assert_eq!(gf, -&fg);
        }
    }

    #[test]
    fn resultant_specializes(f in in_x(3), g in in_x(2), pt in point()) {
        let symbolic = resultant(&f, &g, "x").unwrap();
        match resultant_eval_oracle(&f, &g, "x", &pt) {
            Ok(v) => prop_assert_eq!(symbolic.evaluate(&pt).unwrap(), v),
            Err(Error::LeadingCoefficientVanished { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn discriminant_specializes(n in 2usize..=4, a in prop::collection::vec(-9i64..=9, 4)) {
        let fam = FamilySpec::new(n).unwrap();
        let r = big_discriminant(&fam);
        let p = fam.general_family();
        let dp = p.derivative("x").unwrap();
        let coeffs: Vec<BigInt> = a[..n].iter().map(|&c| BigInt::from(c)).collect();
        let pt = fam.coefficient_point(&coeffs);
        prop_assert_eq!(r.evaluate(&pt).unwrap(), resultant_eval_oracle(&p, &dp, "x", &pt).unwrap());
    }
}

#[test]
fn discriminant_degrees() {
    for n in 3..=5 {
        let fam = FamilySpec::new(n).unwrap();
        let r = big_discriminant(&fam);
        for j in 1..n {
            assert_eq!(r.degree_in(fam.coeff(j)).unwrap(), Some(n as u16), "n={n} a{j}");
        }
        assert_eq!(r.degree_in(fam.coeff(n)).unwrap(), Some(n as u16 - 1));
        assert_eq!(r.qh_degree().unwrap() as usize, n * (n - 1));
    }
}
