//! Inputs shared by the benchmarks.

use redisc_core::{big_discriminant, sylvester, FamilySpec, PolyMatrix};

/// The Sylvester matrix of `R` and `dR/da_k`, whose determinant is `D_k`.
pub fn repeated_sylvester(n: usize, k: usize) -> (FamilySpec, PolyMatrix) {
    let fam = FamilySpec::new(n).expect("n >= 2");
    let r = big_discriminant(&fam);
    let ak = fam.coeff(k).to_string();
    let dr = r.derivative(&ak).expect("a_k in table");
    let (m, _) = sylvester(&r, &dr, &ak).expect("R has positive degree in a_k");
    (fam, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_has_expected_dimension() {
        // deg_{a1} R = 4 and deg_{a1} R' = 3
        let (_, m) = repeated_sylvester(4, 1);
        assert_eq!(m.dim(), 7);
    }
}
