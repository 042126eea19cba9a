use crate::multipoly::table::VarTable;

/// Upper bound on the number of variables of one table.
pub const MAX_VARS: usize = 12;

/// An exponent vector together with its weighted degree.
///
/// The derived ordering is the term order: weighted degree first, then
/// exponents compared lexicographically in table order. Slots past the end
/// of the table stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    wdeg: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        wdeg: 0,
        exps: [0; MAX_VARS],
    };

    pub fn new(exponents: &[u16], table: &VarTable) -> Self {
        assert!(
            exponents.len() <= table.len(),
            "exponent vector longer than the variable table"
        );
        let mut exps = [0u16; MAX_VARS];
        let mut wdeg = 0u32;
        for (i, &e) in exponents.iter().enumerate() {
            exps[i] = e;
            wdeg += e as u32 * table.weight(i);
        }
        Monomial { wdeg, exps }
    }

    /// `var^exp` for the variable at `index`.
    pub fn var_power(index: usize, exp: u16, table: &VarTable) -> Self {
        let mut m = Monomial::ONE;
        m.exps[index] = exp;
        m.wdeg = exp as u32 * table.weight(index);
        m
    }

    pub fn weighted_degree(&self) -> u32 {
        self.wdeg
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).expect("exponent overflow");
        }
        Monomial {
            wdeg: self.wdeg + other.wdeg,
            exps,
        }
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_sub(*o)?;
        }
        Some(Monomial {
            wdeg: self.wdeg - other.wdeg,
            exps,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Drops the variable at `index`, returning the reduced monomial and the
    /// removed exponent.
    pub fn without(&self, index: usize, table: &VarTable) -> (Monomial, u16) {
        let e = self.exps[index];
        let mut m = *self;
        m.exps[index] = 0;
        m.wdeg -= e as u32 * table.weight(index);
        (m, e)
    }

    /// Square root of a monomial whose exponents are all even.
    pub fn sqrt(&self) -> Option<Monomial> {
        if self.wdeg % 2 != 0 || self.exps.iter().any(|e| e % 2 != 0) {
            return None;
        }
        let mut exps = self.exps;
        exps.iter_mut().for_each(|e| *e /= 2);
        Some(Monomial {
            wdeg: self.wdeg / 2,
            exps,
        })
    }
}
