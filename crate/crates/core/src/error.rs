use thiserror::Error;

/// Errors raised by the algebra kernel and the certification pipeline.
///
/// Usage errors (mismatched tables, unknown variables, bad ranges) are
/// distinguished from structural failures (`NotDivisible`, `NotASquare`),
/// which signal that an algebraic claim did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different variable tables")]
    TableMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable table: {0}")]
    InvalidTable(String),

    #[error("not divisible: remainder has leading term {term}")]
    NotDivisible { term: String },

    #[error("not a perfect square: {reason}")]
    NotASquare { reason: String },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("not quasi-homogeneous: terms of weighted degree {high} and {low}")]
    NotQuasiHomogeneous { high: u32, low: u32 },

    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),

    #[error("polynomial has degree 0 in `{var}`")]
    DegreeZero { var: String },

    #[error("leading coefficient in `{var}` vanishes at the specialization point")]
    LeadingCoefficientVanished { var: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid root pattern: {0}")]
    InvalidPattern(String),
}

pub type Result<T> = std::result::Result<T, Error>;
