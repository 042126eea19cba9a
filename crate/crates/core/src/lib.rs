//! Discriminants and repeated discriminants of the general monic family
//! `x^n + a1 x^(n-1) + ... + an`, computed in exact integer arithmetic.
//!
//! The crate is layered bottom-up:
//!
//! * [`multipoly`]: sparse multivariate polynomials over the integers.
//! * [`resultant`]: Sylvester matrices and fraction-free determinants.
//! * [`family`]: the general family, its derived families and root-parametrized
//!   strata samples.
//! * [`factorize`]: the factorization of the repeated discriminant into
//!   `c * an^d * M^2 * T^3` and the accompanying degree and restriction checks.

pub mod error;
pub mod factorize;
pub mod family;
pub mod multipoly;
pub mod resultant;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use factorize::{
    big_discriminant, d_exponent, factor_pipeline, factor_pipeline_from, tilde_d,
    verify_qhd, verify_qhd_from_reports, verify_restriction_lemma, verify_specialized_forms,
    FactorizationReport, LemmaCase, LemmaReport, PipelineOptions,
};
pub use family::{FamilySpec, RootPattern, StrataSample};
pub use multipoly::{parse_poly, serialize_poly, ArithOp, Monomial, Point, Polynomial, RationalConstant, VarTable};
pub use resultant::{det_cofactor, det_fraction_free, resultant, resultant_eval_oracle, sylvester, PolyMatrix, SylvesterLayout};

/// Library version, part of every cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
