//! Exact sparse multivariate polynomials over the integers.
//!
//! Every polynomial is tied to a [`VarTable`] fixing variable order and
//! quasi-homogeneous weights. The term order is graded by weighted degree
//! with ties broken lexicographically in table order, and terms are stored
//! in descending order so the canonical text form is stable.

mod monomial;
mod ops;
mod poly;
mod rational;
mod table;
mod text;

pub use monomial::{Monomial, MAX_VARS};
pub use ops::Point;
pub use poly::{ArithOp, Polynomial};
pub use rational::RationalConstant;
pub use table::VarTable;
pub use text::{parse_poly, serialize_poly};
