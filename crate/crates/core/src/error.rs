use thiserror::Error;

use crate::rational::Rational;

/// Errors raised by the exact polynomial and series kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Evaluation at x = 0 of a Laurent polynomial with negative exponents.
    #[error("evaluation at x = 0 of a Laurent polynomial with negative exponents")]
    EvalAtPole,

    /// Composition p(f(x)) where p carries negative exponents.
    #[error("cannot compose a Laurent polynomial with negative exponents into another polynomial")]
    ComposeWithLaurent,

    /// Series reciprocal requires a nonzero constant term a_0.
    #[error("series reciprocal requires a nonzero constant (x-free) coefficient at t^0")]
    NonUnitConstantTerm,

    /// A lower hypergeometric parameter is zero or a negative integer, so a
    /// Pochhammer denominator would vanish.
    #[error("lower parameter {0} is zero or a negative integer")]
    LowerParamPole(Rational),

    /// The hermite reduction is only defined at order k = 2.
    #[error("hermite reduction requires k = 2, got k = {0}")]
    BadReduction(u32),

    /// Family order k must be a positive integer.
    #[error("family order k must be at least 1")]
    ZeroFamilyOrder,

    /// A rational literal did not match "p/q" or "p".
    #[error("cannot parse {0:?} as a rational literal (\"p/q\" or \"p\")")]
    ParseRational(String),

    /// Exact division by zero (including 0 raised to a negative power).
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
