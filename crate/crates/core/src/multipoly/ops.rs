use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multipoly::monomial::Monomial;
use crate::multipoly::poly::Polynomial;
use crate::multipoly::text::format_term;

/// An integer assignment to (some of) the variables, keyed by name.
pub type Point = BTreeMap<String, BigInt>;

impl Polynomial {
    /// Formal partial derivative with respect to `var`.
    pub fn derivative(&self, var: &str) -> Result<Polynomial> {
        let i = self.table().index_of(var)?;
        Ok(self.derivative_at(i))
    }

    pub(crate) fn derivative_at(&self, i: usize) -> Polynomial {
        let table = self.table().clone();
        let one = Monomial::var_power(i, 1, &table);
        // dividing every term by the same variable keeps the order intact
        let terms = self
            .raw_terms()
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(i);
                (e > 0).then(|| (m.div(&one).unwrap(), c * BigInt::from(e)))
            })
            .collect();
        Polynomial::from_sorted(&table, terms)
    }

    /// Degree in `var`, or `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Result<Option<u16>> {
        let i = self.table().index_of(var)?;
        Ok(self.degree_at(i))
    }

    pub(crate) fn degree_at(&self, i: usize) -> Option<u16> {
        self.raw_terms().iter().map(|(m, _)| m.exponent(i)).max()
    }

    /// Coefficients with respect to `var`: entry `j` is the coefficient of
    /// `var^j`, a polynomial free of `var` over the same table.
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<Polynomial>> {
        let i = self.table().index_of(var)?;
        Ok(self.coefficients_at(i))
    }

    pub(crate) fn coefficients_at(&self, i: usize) -> Vec<Polynomial> {
        let table = self.table().clone();
        let Some(deg) = self.degree_at(i) else {
            return Vec::new();
        };
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg as usize + 1];
        for (m, c) in self.raw_terms() {
            let (rest, e) = m.without(i, &table);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut terms| {
                terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Polynomial::from_sorted(&table, terms)
            })
            .collect()
    }

    /// Replaces every occurrence of `var` by `value` and expands.
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<Polynomial> {
        self.check_table(value)?;
        let i = self.table().index_of(var)?;
        let coeffs = self.coefficients_at(i);
        let mut acc = Polynomial::zero(self.table());
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        Ok(acc)
    }

    /// Exact integer value at `point`, which must cover every variable
    /// occurring in the polynomial.
    pub fn evaluate(&self, point: &Point) -> Result<BigInt> {
        let table = self.table();
        let mut values: Vec<Option<&BigInt>> = vec![None; table.len()];
        for (i, name) in table.names().iter().enumerate() {
            values[i] = point.get(name);
        }
        let mut powers: HashMap<(usize, u16), BigInt> = HashMap::new();
        let mut total = BigInt::zero();
        for (m, c) in self.raw_terms() {
            let mut term = c.clone();
            for (i, slot) in values.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let v = slot.ok_or_else(|| Error::MissingAssignment(table.name(i).to_string()))?;
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| num_traits::pow(v.clone(), e as usize));
                term *= &*p;
            }
            total += term;
        }
        Ok(total)
    }

    /// Exact quotient `self / divisor`, by multivariate division under the
    /// term order with mandatory zero remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_table(divisor)?;
        let Some((lm, lc)) = divisor.leading_term() else {
            return Err(Error::ZeroPolynomial);
        };
        let (lm, lc) = (*lm, lc.clone());
        if divisor.num_terms() == 1 {
            return self.div_by_term(&lm, &lc);
        }
        let mut rem: BTreeMap<Monomial, BigInt> = self.raw_terms().iter().cloned().collect();
        let mut quotient = Vec::new();
        let tail = &divisor.raw_terms()[1..];
        while let Some((m, c)) = rem.pop_last() {
            let not_divisible = || Error::NotDivisible {
                term: format_term(&m, &c, self.table()),
            };
            let qm = m.div(&lm).ok_or_else(not_divisible)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (dm, dc) in tail {
                let key = qm.mul(dm);
                let delta = &qc * dc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Polynomial::from_sorted(self.table(), quotient))
    }

    fn div_by_term(&self, m: &Monomial, c: &BigInt) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.num_terms());
        for (tm, tc) in self.raw_terms() {
            let not_divisible = || Error::NotDivisible {
                term: format_term(tm, tc, self.table()),
            };
            let qm = tm.div(m).ok_or_else(not_divisible)?;
            let (q, r) = tc.div_rem(c);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            terms.push((qm, q));
        }
        Ok(Polynomial::from_sorted(self.table(), terms))
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_integer(&self, d: &BigInt) -> Result<Polynomial> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.div_by_term(&Monomial::ONE, d)
    }

    /// Positive gcd of the coefficients.
    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for (_, c) in self.raw_terms() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// `self / content`, negated if needed so the leading coefficient is
    /// positive.
    pub fn primitive_part(&self) -> Result<Polynomial> {
        let mut g = self.content()?;
        if self.is_negative_leading() {
            g = -g;
        }
        self.div_integer(&g)
    }

    /// Signed content `s` with `self = s * primitive_part(self)`.
    pub fn signed_content(&self) -> Result<BigInt> {
        let g = self.content()?;
        Ok(if self.is_negative_leading() { -g } else { g })
    }

    /// Common weighted degree of all terms.
    pub fn qh_degree(&self) -> Result<u32> {
        let (Some((hi, _)), Some((lo, _))) = (self.leading_term(), self.trailing_term()) else {
            return Err(Error::ZeroPolynomial);
        };
        let (high, low) = (hi.weighted_degree(), lo.weighted_degree());
        if high == low {
            Ok(high)
        } else {
            Err(Error::NotQuasiHomogeneous { high, low })
        }
    }

    /// Largest `e` with `var^e` dividing the polynomial.
    pub fn var_multiplicity(&self, var: &str) -> Result<u16> {
        let i = self.table().index_of(var)?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.raw_terms().iter().map(|(m, _)| m.exponent(i)).min().unwrap())
    }

    /// Square root by term-order long division; the root is returned with a
    /// positive leading coefficient and verified by squaring.
    pub fn poly_sqrt(&self) -> Result<Polynomial> {
        let table = self.table().clone();
        let (Some((lm, lc)), Some((tm, _))) = (self.leading_term(), self.trailing_term()) else {
            return Err(Error::ZeroPolynomial);
        };
        let trailing = *tm;
        let fail = |reason: String| Error::NotASquare { reason };
        if lc.is_negative() {
            return Err(fail("leading coefficient is negative".into()));
        }
        let root_c = lc.sqrt();
        if &(&root_c * &root_c) != lc {
            return Err(fail(format!("leading coefficient {lc} is not a square")));
        }
        let root_m = lm
            .sqrt()
            .ok_or_else(|| fail("leading monomial has an odd exponent".into()))?;

        let mut root = vec![(root_m, root_c.clone())];
        let twice_lc = BigInt::from(2) * &root_c;
        let mut rem = self - &Polynomial::monomial(&table, root_m, root_c.clone()).pow(2);
        let mut steps = 0usize;
        while let Some((m, c)) = rem.leading_term() {
            steps += 1;
            if *m < trailing || steps > self.num_terms() + 1 {
                return Err(fail(format!(
                    "remainder term {} cannot be cancelled",
                    format_term(m, c, &table)
                )));
            }
            let Some(next_m) = m.div(&root_m) else {
                return Err(fail(format!(
                    "remainder term {} is not divisible by the root's leading monomial",
                    format_term(m, c, &table)
                )));
            };
            let (next_c, r) = c.div_rem(&twice_lc);
            if !r.is_zero() {
                return Err(fail(format!(
                    "remainder term {} has an inexact coefficient",
                    format_term(m, c, &table)
                )));
            }
            if next_m >= root.last().unwrap().0 {
                return Err(fail("root terms are not decreasing".into()));
            }
            // rem -= 2*S*t + t^2 where S is the partial root and t the new term
            let partial = Polynomial::from_sorted(&table, root.clone());
            let t = Polynomial::monomial(&table, next_m, next_c.clone());
            let update = &partial.scale(&BigInt::from(2)) + &t;
            rem = &rem - &(&update * &t);
            root.push((next_m, next_c));
        }
        let root = Polynomial::from_sorted(&table, root);
        if &(&root * &root) != self {
            return Err(fail("squaring the candidate root does not reproduce the input".into()));
        }
        Ok(root)
    }
}
