//! Sylvester matrices, exact determinants and resultants.
//!
//! Symbolic determinants use one-step fraction-free (Bareiss) elimination:
//! after step `k` every working entry is a `(k+1)`-minor of the input, so
//! each division by the previous pivot is exact. The cofactor expansion and
//! the specialized integer determinant exist as independent cross-checks.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multipoly::{Point, Polynomial, VarTable};

/// Dense square matrix of polynomials over one table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    table: Arc<VarTable>,
    dim: usize,
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(table: &Arc<VarTable>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::OutOfRange("matrix dimension must be positive".into()));
        }
        for row in &rows {
            if row.len() != dim {
                return Err(Error::OutOfRange(format!(
                    "row of length {} in a {dim}x{dim} matrix",
                    row.len()
                )));
            }
            if row.iter().any(|p| !Arc::ptr_eq(p.table(), table) && **p.table() != **table) {
                return Err(Error::TableMismatch);
            }
        }
        Ok(PolyMatrix {
            table: table.clone(),
            dim,
            rows,
        })
    }

    pub fn identity(table: &Arc<VarTable>, dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(table)
                        } else {
                            Polynomial::zero(table)
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix {
            table: table.clone(),
            dim,
            rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }
}

/// Shape of a Sylvester matrix: `deg_g` rows of shifted `F` coefficients
/// followed by `deg_f` rows of shifted `G` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterLayout {
    pub main_var: String,
    pub deg_f: usize,
    pub deg_g: usize,
}

impl SylvesterLayout {
    pub fn dim(&self) -> usize {
        self.deg_f + self.deg_g
    }
}

fn positive_degree(p: &Polynomial, i: usize) -> Result<usize> {
    match p.degree_at(i) {
        Some(d) if d > 0 => Ok(d as usize),
        _ => Err(Error::DegreeZero {
            var: p.table().name(i).to_string(),
        }),
    }
}

pub fn sylvester(f: &Polynomial, g: &Polynomial, var: &str) -> Result<(PolyMatrix, SylvesterLayout)> {
    f.check_table(g)?;
    let table = f.table().clone();
    let i = table.index_of(var)?;
    let deg_f = positive_degree(f, i)?;
    let deg_g = positive_degree(g, i)?;
    let fc = f.coefficients_at(i);
    let gc = g.coefficients_at(i);
    let dim = deg_f + deg_g;
    let zero = Polynomial::zero(&table);

    let shifted = |coeffs: &[Polynomial], deg: usize, shift: usize| -> Vec<Polynomial> {
        (0..dim)
            .map(|col| match col.checked_sub(shift) {
                Some(off) if off <= deg => coeffs[deg - off].clone(),
                _ => zero.clone(),
            })
            .collect()
    };
    let mut rows = Vec::with_capacity(dim);
    rows.extend((0..deg_g).map(|r| shifted(&fc, deg_f, r)));
    rows.extend((0..deg_f).map(|r| shifted(&gc, deg_g, r)));
    let layout = SylvesterLayout {
        main_var: var.to_string(),
        deg_f,
        deg_g,
    };
    Ok((
        PolyMatrix {
            table,
            dim,
            rows,
        },
        layout,
    ))
}

/// Exact determinant by Bareiss elimination.
///
/// The pivot in each column is the nonzero candidate with the fewest terms,
/// ties going to the lowest row. A column with no nonzero candidate makes
/// the remaining minor, and hence the determinant, zero (its cofactor
/// expansion along that column is empty). Row updates run in parallel; each
/// entry is computed independently, so the result does not depend on the
/// thread count.
pub fn det_fraction_free(m: &PolyMatrix) -> Polynomial {
    let table = m.table.clone();
    let n = m.dim;
    let mut a = m.rows.clone();
    let mut negate = false;
    let mut prev = Polynomial::one(&table);

    for k in 0..n.saturating_sub(1) {
        let pivot = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| (a[r][k].num_terms(), r));
        let Some(pivot) = pivot else {
            return Polynomial::zero(&table);
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let p = &pivot_row[k];
        let prev_ref = &prev;
        bottom.par_iter_mut().for_each(|row| {
            let lead = std::mem::replace(&mut row[k], Polynomial::zero(&table));
            for j in (k + 1)..n {
                let mut num = p * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num = &num - &(&lead * &pivot_row[j]);
                }
                row[j] = if prev_ref.is_one() {
                    num
                } else {
                    num.exact_div(prev_ref)
                        .expect("Bareiss step divides exactly by the previous pivot")
                };
            }
        });
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by Laplace expansion along the line with the most zeros.
/// Exponential in the dimension; intended as an oracle for small matrices.
pub fn det_cofactor(m: &PolyMatrix) -> Polynomial {
    let rows: Vec<usize> = (0..m.dim).collect();
    let cols: Vec<usize> = (0..m.dim).collect();
    laplace(m, &rows, &cols)
}

fn laplace(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    let n = rows.len();
    if n == 1 {
        return m.rows[rows[0]][cols[0]].clone();
    }
    let zeros_in_row = |r: usize| cols.iter().filter(|&&c| m.rows[r][c].is_zero()).count();
    let zeros_in_col = |c: usize| rows.iter().filter(|&&r| m.rows[r][c].is_zero()).count();
    let (best_row, row_zeros) = (0..n).map(|i| (i, zeros_in_row(rows[i]))).max_by_key(|&(i, z)| (z, std::cmp::Reverse(i))).unwrap();
    let (best_col, col_zeros) = (0..n).map(|j| (j, zeros_in_col(cols[j]))).max_by_key(|&(j, z)| (z, std::cmp::Reverse(j))).unwrap();

    let mut acc = Polynomial::zero(&m.table);
    if row_zeros >= col_zeros {
        let r = best_row;
        let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|&(i, _)| i != r).map(|(_, &v)| v).collect();
        for j in 0..n {
            let entry = &m.rows[rows[r]][cols[j]];
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect();
            let minor = entry * &laplace(m, &sub_rows, &sub_cols);
            acc = if (r + j) % 2 == 0 { &acc + &minor } else { &acc - &minor };
        }
    } else {
        let c = best_col;
        let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect();
        for i in 0..n {
            let entry = &m.rows[rows[i]][cols[c]];
            if entry.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|&(r, _)| r != i).map(|(_, &v)| v).collect();
            let minor = entry * &laplace(m, &sub_rows, &sub_cols);
            acc = if (i + c) % 2 == 0 { &acc + &minor } else { &acc - &minor };
        }
    }
    acc
}

/// `Res(F, G, var)`, a polynomial free of `var`.
pub fn resultant(f: &Polynomial, g: &Polynomial, var: &str) -> Result<Polynomial> {
    let (m, _) = sylvester(f, g, var)?;
    Ok(det_fraction_free(&m))
}

/// Resultant of the specializations of `F` and `G` at `point`, computed as
/// an integer determinant independently of the symbolic path.
///
/// The point must keep both leading coefficients in `var` nonzero,
/// otherwise the specialization does not commute with the resultant.
pub fn resultant_eval_oracle(f: &Polynomial, g: &Polynomial, var: &str, point: &Point) -> Result<BigInt> {
    f.check_table(g)?;
    let i = f.table().index_of(var)?;
    positive_degree(f, i)?;
    positive_degree(g, i)?;
    let specialize = |p: &Polynomial| -> Result<Vec<BigInt>> {
        let mut coeffs = p
            .coefficients_at(i)
            .iter()
            .map(|c| c.evaluate(point))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.last().is_some_and(|c| c.is_zero()) {
            return Err(Error::LeadingCoefficientVanished { var: var.to_string() });
        }
        coeffs.reverse();
        Ok(coeffs)
    };
    Ok(int_resultant(&specialize(f)?, &specialize(g)?))
}

/// Resultant of two univariate integer polynomials given by coefficients in
/// descending degree order (leading coefficient first).
pub fn int_resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let deg_f = f.len().saturating_sub(1);
    let deg_g = g.len().saturating_sub(1);
    let dim = deg_f + deg_g;
    if dim == 0 {
        return BigInt::one();
    }
    let mut m = vec![vec![BigInt::zero(); dim]; dim];
    for r in 0..deg_g {
        for (j, c) in f.iter().enumerate() {
            m[r][r + j] = c.clone();
        }
    }
    for r in 0..deg_f {
        for (j, c) in g.iter().enumerate() {
            m[deg_g + r][r + j] = c.clone();
        }
    }
    int_det(m)
}

/// Integer Bareiss determinant with nonzero pivot search.
pub fn int_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse_poly;

    #[test]
    fn cubic_sylvester_layout() {
        let t = VarTable::family_letters(3).unwrap();
        let p = parse_poly("x^3 + a*x^2 + b*x + c", &t).unwrap();
        let dp = p.derivative("x").unwrap();
        let (m, layout) = sylvester(&p, &dp, "x").unwrap();
        assert_eq!(m.dim(), 5);
        assert_eq!((layout.deg_f, layout.deg_g, layout.dim()), (3, 2, 5));
        let row = |r: usize| m.rows()[r].iter().map(|e| e.to_string()).collect::<Vec<_>>();
        assert_eq!(row(0), ["1", "a", "b", "c", "0"]);
        assert_eq!(row(1), ["0", "1", "a", "b", "c"]);
        assert_eq!(row(2), ["3", "2*a", "b", "0", "0"]);
        assert_eq!(row(4), ["0", "0", "3", "2*a", "b"]);
    }

    #[test]
    fn linear_sylvester() {
        let t = VarTable::family(2).unwrap();
        let f = parse_poly("x + a1", &t).unwrap();
        let g = parse_poly("2*x + a2", &t).unwrap();
        let (m, _) = sylvester(&f, &g, "x").unwrap();
        let cells: Vec<String> = m.rows().iter().flatten().map(|e| e.to_string()).collect();
        assert_eq!(cells, ["1", "a1", "2", "a2"]);
    }

    #[test]
    fn sylvester_dimension_is_2n_minus_1() {
        for n in 2..=6 {
            let t = VarTable::family(n).unwrap();
            let mut p = Polynomial::monomial(&t, crate::multipoly::Monomial::var_power(0, n as u16, &t), 1);
            for j in 1..=n {
                let x = Polynomial::monomial(&t, crate::multipoly::Monomial::var_power(0, (n - j) as u16, &t), 1);
                p = &p + &(&x * &Polynomial::var(&t, &format!("a{j}")).unwrap());
            }
            let (m, _) = sylvester(&p, &p.derivative("x").unwrap(), "x").unwrap();
            assert_eq!(m.dim(), 2 * n - 1);
        }
    }

    #[test]
    fn degree_zero_rejected() {
        let t = VarTable::family(2).unwrap();
        let f = parse_poly("x + a1", &t).unwrap();
        let g = parse_poly("a2", &t).unwrap();
        assert_eq!(sylvester(&f, &g, "x").unwrap_err(), Error::DegreeZero { var: "x".into() });
    }

    #[test]
    fn small_determinants() {
        let t = VarTable::family(3).unwrap();
        assert!(det_fraction_free(&PolyMatrix::identity(&t, 3)).is_one());
        let p = |s: &str| parse_poly(s, &t).unwrap();
        let row = vec![p("a1"), p("a2 + 1"), p("x")];
        let m = PolyMatrix::new(&t, vec![row.clone(), vec![p("1"), p("a3"), p("2")], row]).unwrap();
        assert!(det_fraction_free(&m).is_zero());
        assert!(det_cofactor(&m).is_zero());
    }

    #[test]
    fn cubic_discriminant() {
        let t = VarTable::family_letters(3).unwrap();
        let p = parse_poly("x^3 + a*x^2 + b*x + c", &t).unwrap();
        let r = resultant(&p, &p.derivative("x").unwrap(), "x").unwrap();
        let expected = parse_poly("4*a^3*c - a^2*b^2 - 18*a*b*c + 4*b^3 + 27*c^2", &t).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn linear_resultant() {
        let t = VarTable::family(2).unwrap();
        let f = parse_poly("x - a1", &t).unwrap();
        let g = parse_poly("x - a2", &t).unwrap();
        let r = resultant(&f, &g, "x").unwrap();
        assert!(r == parse_poly("a1 - a2", &t).unwrap() || r == parse_poly("a2 - a1", &t).unwrap());
    }

    #[test]
    fn oracle_on_constants() {
        let t = VarTable::family(1).unwrap();
        let f = parse_poly("x^2 - 2", &t).unwrap();
        let g = parse_poly("x - 1", &t).unwrap();
        assert_eq!(resultant_eval_oracle(&f, &g, "x", &Point::new()).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn oracle_detects_vanishing_leading_coefficient() {
        let t = VarTable::family(2).unwrap();
        let f = parse_poly("a1*x^2 + x + a2", &t).unwrap();
        let g = parse_poly("x - 1", &t).unwrap();
        let pt: Point = [("a1".to_string(), BigInt::zero()), ("a2".to_string(), BigInt::one())].into();
        assert!(matches!(
            resultant_eval_oracle(&f, &g, "x", &pt),
            Err(Error::LeadingCoefficientVanished { .. })
        ));
    }

    #[test]
    fn integer_determinant() {
        let m = |v: [[i64; 3]; 3]| v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(int_det(m([[2, 0, 1], [1, 3, 2], [1, 1, 1]])), BigInt::from(0));
        assert_eq!(int_det(m([[0, 1, 0], [1, 0, 0], [0, 0, 5]])), BigInt::from(-5));
        assert_eq!(int_det(m([[1, 2, 3], [4, 5, 6], [7, 8, 10]])), BigInt::from(-3));
    }
}
