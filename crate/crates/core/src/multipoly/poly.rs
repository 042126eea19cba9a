use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::multipoly::monomial::Monomial;
use crate::multipoly::table::VarTable;

/// Product size (term pairs) above which multiplication is split across threads.
const PAR_MUL_THRESHOLD: usize = 1 << 16;

/// A sparse polynomial with integer coefficients over a fixed [`VarTable`].
///
/// Terms are kept sorted in descending term order and no stored coefficient
/// is zero, so structural equality is mathematical equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    table: Arc<VarTable>,
    terms: Vec<(Monomial, BigInt)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        Polynomial {
            table: table.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, BigInt::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::ONE, c)]
        };
        Polynomial {
            table: table.clone(),
            terms,
        }
    }

    pub fn var(table: &Arc<VarTable>, name: &str) -> Result<Self> {
        let i = table.index_of(name)?;
        Ok(Self::var_at(table, i))
    }

    pub(crate) fn var_at(table: &Arc<VarTable>, index: usize) -> Self {
        Self::monomial(table, Monomial::var_power(index, 1, table), BigInt::one())
    }

    pub fn monomial(table: &Arc<VarTable>, m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            table: table.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (exponents, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I, E, C>(table: &Arc<VarTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        E: AsRef<[u16]>,
        C: Into<BigInt>,
    {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (e, c) in terms {
            *acc.entry(Monomial::new(e.as_ref(), table)).or_default() += c.into();
        }
        Self::from_map(table, acc)
    }

    pub(crate) fn from_map(table: &Arc<VarTable>, map: FxHashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            table: table.clone(),
            terms,
        }
    }

    /// Trusts the caller: `terms` must be strictly descending with no zeros.
    pub(crate) fn from_sorted(table: &Arc<VarTable>, terms: Vec<(Monomial, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            table: table.clone(),
            terms,
        }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn same_table(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || self.table == other.table
    }

    pub(crate) fn check_table(&self, other: &Polynomial) -> Result<()> {
        if self.same_table(other) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The integer value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn trailing_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_table(other)?;
        Ok(match op {
            ArithOp::Add => self.merge(other, false),
            ArithOp::Sub => self.merge(other, true),
            ArithOp::Mul => self.mul_impl(other),
        })
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Add)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Mul)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => x.0.cmp(&y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, c) = b.next().unwrap();
                    out.push((*m, if negate { -c } else { c.clone() }));
                }
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let c = if negate { x - y } else { x + y };
                    if !c.is_zero() {
                        out.push((*m, c));
                    }
                }
            }
        }
        Polynomial::from_sorted(&self.table, out)
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.is_empty() {
            return Polynomial::zero(&self.table);
        }
        if small.terms.len() == 1 {
            return big.mul_term(&small.terms[0].0, &small.terms[0].1);
        }
        if big.terms.len() * small.terms.len() < PAR_MUL_THRESHOLD {
            return Polynomial::from_map(&self.table, mul_accumulate(&big.terms, &small.terms));
        }
        let chunk = (big.terms.len() / rayon::current_num_threads().max(1)).max(64);
        big.terms
            .par_chunks(chunk)
            .map(|part| Polynomial::from_map(&self.table, mul_accumulate(part, &small.terms)))
            .reduce(|| Polynomial::zero(&self.table), |x, y| x.merge(&y, false))
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        // multiplication by a monomial preserves the term order
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect();
        Polynomial::from_sorted(&self.table, terms)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.table);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Moves the polynomial onto `target`, matching variables by name.
    /// Fails if a variable that actually occurs is missing from `target`.
    pub fn reembed(&self, target: &Arc<VarTable>) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.table.len());
        for (i, name) in self.table.names().iter().enumerate() {
            let used = self.terms.iter().any(|(m, _)| m.exponent(i) > 0);
            map.push(match target.index_of(name) {
                Ok(j) => Some(j),
                Err(e) if used => return Err(e),
                Err(_) => None,
            });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; target.len()];
            for (i, slot) in map.iter().enumerate() {
                if let Some(j) = slot {
                    exps[*j] = m.exponent(i);
                }
            }
            (exps, c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Reinterprets the polynomial over a table with identical weights but
    /// different names.
    pub fn rename(&self, target: &Arc<VarTable>) -> Result<Polynomial> {
        if !self.table.same_shape(target) {
            return Err(Error::TableMismatch);
        }
        Ok(Polynomial {
            table: target.clone(),
            terms: self.terms.clone(),
        })
    }

    pub(crate) fn raw_terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub(crate) fn is_negative_leading(&self) -> bool {
        self.terms.first().is_some_and(|(_, c)| c.is_negative())
    }
}

fn mul_accumulate(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)]) -> FxHashMap<Monomial, BigInt> {
    let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
    acc.reserve((a.len() * b.len() / 4).min(1 << 16));
    for (am, ac) in a {
        for (bm, bc) in b {
            let m = am.mul(bm);
            match acc.get_mut(&m) {
                Some(c) => *c += ac * bc,
                None => {
                    acc.insert(m, ac * bc);
                }
            }
        }
    }
    acc
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        /// Panics when the operands live over different tables; use
        /// [`Polynomial::arith`] for a fallible variant.
        impl<'a> $trait<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.arith(rhs, $op).expect("polynomial variable tables differ")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Polynomial::from_sorted(&self.table, terms)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}
