//! Exact arithmetic for a family of hypergeometric Appell polynomials.
//!
//! The family A_n^(k)(m, x) is parametrized by two lists of rational
//! hypergeometric parameters, an order k >= 1, and a rational m. Everything
//! here is exact: scalars are arbitrary-precision rationals, polynomials
//! allow negative exponents, and power series are truncated at an explicit
//! order. On top of those engines sit four independent constructions of the
//! family members, closed-form oracles for the Hermite and Gould-Hopper
//! special cases, and machine checks for the derivative rule, the
//! hypergeometric derivative identity, the addition/multiplication/index
//! interchange/convolution formulas, parity, and the connection problem.
//!
//! The checks are deliberately redundant. Each identity is verified against
//! a route that does not share code with the construction under test, so a
//! bug in one path cannot silently confirm itself.

pub mod error;
pub mod family;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod reductions;
pub mod series;

pub use error::{Error, Result};
pub use family::{delta_hyper_series, pfq_terminating, DeltaArray, FamilySpec, HyperParams};
pub use identities::{
    check_addition, check_appell_derivative, check_composed_derivative, check_convolution,
    check_corollary1, check_index_interchange, check_multiplication, check_parity,
    connection_coefficients, ConnectionDirection, IdentityReport, Witness,
};
pub use poly::LaurentPoly;
pub use rational::{binomial, factorial, falling_factorial, pochhammer, Rational};
pub use reductions::{gould_hopper, hermite_probabilists, reduce_spec, ReductionKind};
pub use series::{exp_xt_series, TruncatedSeries};
