use std::sync::Arc;

use crate::error::{Error, Result};
use crate::multipoly::monomial::MAX_VARS;

/// Ordered variable names together with their quasi-homogeneous weights.
///
/// The order is fixed at construction. Earlier variables rank higher in
/// the lexicographic tie-break of the term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarTable {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        weights: impl IntoIterator<Item = u32>,
    ) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights: Vec<u32> = weights.into_iter().collect();
        if names.len() != weights.len() {
            return Err(Error::InvalidTable(format!(
                "{} names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidTable(format!(
                "{} variables exceeds the supported maximum of {MAX_VARS}",
                names.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidTable(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidTable(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(VarTable { names, weights }))
    }

    /// The table `x, a1, ..., an` with weights `1, 1, 2, ..., n`.
    pub fn family(n: usize) -> Result<Arc<Self>> {
        let names = std::iter::once("x".to_string()).chain((1..=n).map(|j| format!("a{j}")));
        let weights = std::iter::once(1).chain(1..=n as u32);
        Self::new(names, weights)
    }

    /// Same grading as [`VarTable::family`] with the coefficients named
    /// `a, b, c, ...`.
    pub fn family_letters(n: usize) -> Result<Arc<Self>> {
        if n > 23 {
            return Err(Error::InvalidTable(format!("no letter naming for n = {n}")));
        }
        let names = std::iter::once("x".to_string())
            .chain((0..n).map(|j| ((b'a' + j as u8) as char).to_string()));
        let weights = std::iter::once(1).chain(1..=n as u32);
        Self::new(names, weights)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn weight(&self, index: usize) -> u32 {
        self.weights[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// True when the two tables have the same weights position by position,
    /// so polynomials can be moved between them by renaming alone.
    pub fn same_shape(&self, other: &VarTable) -> bool {
        self.weights == other.weights
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
