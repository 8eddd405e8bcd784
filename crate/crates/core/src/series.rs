//! Truncated formal power series in t with Laurent-polynomial coefficients.
//!
//! A series stores the coefficients of t^0 .. t^order; all arithmetic is
//! performed modulo t^(order+1), and binary operations truncate to the
//! smaller operand order. Scalar series (every coefficient a constant) model
//! plain power series such as the exponential generating function A(t);
//! polynomial coefficients appear in products like A(t)·e^{xt}.

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rational::{factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>, // length = order + 1
}

impl TruncatedSeries {
    /// Builds from t^0.. coefficients, padding with zeros up to `order`.
    pub fn new(order: usize, mut coeffs: Vec<LaurentPoly>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize_with(order + 1, LaurentPoly::zero);
        TruncatedSeries { coeffs }
    }

    /// A series with constant coefficients.
    pub fn from_scalars(order: usize, scalars: Vec<Rational>) -> Self {
        TruncatedSeries::new(
            order,
            scalars.into_iter().map(LaurentPoly::constant).collect(),
        )
    }

    /// The unit series 1 + 0·t + …
    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(order, vec![LaurentPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^s.
    pub fn coeff(&self, s: usize) -> &LaurentPoly {
        &self.coeffs[s]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// The coefficients as plain rationals, if every one is constant in x.
    pub fn scalar_coefficients(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(LaurentPoly::as_constant).collect()
    }

    /// Substitutes t -> -t: flips the sign of odd-index coefficients.
    pub fn negate_variable(&self) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(s, c)| if s % 2 == 1 { -c } else { c.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse modulo t^(order+1).
    ///
    /// Requires the t^0 coefficient to be a nonzero constant; the usual
    /// recursion r_s = -(1/a_0) Σ_{j=1..s} a_j r_{s-j} then applies.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let a0 = self.coeffs[0]
            .as_constant()
            .ok_or(Error::NonUnitConstantTerm)?;
        if a0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let a0_inv = Rational::one().checked_div(&a0)?;
        let mut recip: Vec<LaurentPoly> = Vec::with_capacity(self.coeffs.len());
        recip.push(LaurentPoly::constant(a0_inv.clone()));
        for s in 1..self.coeffs.len() {
            let mut acc = LaurentPoly::zero();
            for j in 1..=s {
                acc = &acc + &(&self.coeffs[j] * &recip[s - j]);
            }
            recip.push(acc.scale(&-&a0_inv));
        }
        Ok(TruncatedSeries { coeffs: recip })
    }
}

/// Cauchy product, truncated at the smaller operand order.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// e^{xt} truncated at `order`: the t^s coefficient is the monomial x^s/s!.
pub fn exp_xt_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|s| {
            let inv_fact = Rational::one()
                .checked_div(&factorial(s as u32))
                .expect("factorial is nonzero");
            LaurentPoly::monomial(s as i64, inv_fact)
        })
        .collect();
    TruncatedSeries { coeffs }
}
