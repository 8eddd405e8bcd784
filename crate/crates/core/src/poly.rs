//! Dense Laurent polynomials over exact rationals.
//!
//! A `LaurentPoly` stores a contiguous coefficient band starting at a
//! (possibly negative) minimum exponent. Negative powers are first-class, so
//! expressions like x^n · F(m/x^k) can be expanded literally and compared for
//! structural equality without clearing denominators.
//!
//! Canonical form: the zero polynomial is the empty band at exponent 0, and a
//! nonzero band never starts or ends with a zero coefficient. Equality is
//! therefore plain structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    /// Builds from a dense ascending coefficient band, restoring canonical form.
    pub fn new(min_exp: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.canonicalize();
        p
    }

    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::new(0, vec![c])
    }

    /// c · x^e
    pub fn monomial(e: i64, c: Rational) -> Self {
        LaurentPoly::new(e, vec![c])
    }

    /// x^e
    pub fn x_pow(e: i64) -> Self {
        LaurentPoly::monomial(e, Rational::one())
    }

    fn canonicalize(&mut self) {
        let leading = self.coeffs.iter().rposition(|c| !c.is_zero());
        match leading {
            None => {
                self.coeffs.clear();
                self.min_exp = 0;
            }
            Some(hi) => {
                self.coeffs.truncate(hi + 1);
                let lo = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
                if lo > 0 {
                    self.coeffs.drain(..lo);
                    self.min_exp += lo as i64;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored exponent (0 for the zero polynomial).
    pub fn min_exponent(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficient of x^e (zero outside the stored band).
    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.min_exp {
            return Rational::zero();
        }
        let idx = (e - self.min_exp) as usize;
        self.coeffs.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    /// Some(c) when the polynomial is the constant c (zero counts as 0).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.min_exp == 0 && self.coeffs.len() == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// True when no negative exponent is present (ordinary polynomial).
    pub fn is_ordinary(&self) -> bool {
        self.is_zero() || self.min_exp >= 0
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (self.min_exp + j as i64, c))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() || self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Term-wise d/dx, including negative exponents (d/dx x^{-1} = -x^{-2}).
    pub fn derivative(&self) -> LaurentPoly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = self.min_exp + j as i64;
            coeffs.push(c * Rational::from(e));
        }
        LaurentPoly::new(self.min_exp - 1, coeffs)
    }

    /// Exact evaluation at x0 (Horner on the ordinary part, then the x0^min
    /// shift). Errors at x0 = 0 when negative exponents are present.
    pub fn eval(&self, x0: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if self.min_exp < 0 && x0.is_zero() {
            return Err(Error::EvalAtPole);
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        Ok(acc * x0.pow(self.min_exp))
    }

    /// Values at integer points, returned as numerators over one shared
    /// denominator. Clearing the coefficients once lets the Horner loop run
    /// in plain integers; the result is exact but not reduced. Requires an
    /// ordinary polynomial.
    pub(crate) fn eval_cleared(&self, points: &[i64]) -> (Vec<num_bigint::BigInt>, num_bigint::BigInt) {
        use num_bigint::BigInt;
        use num_integer::Integer;

        debug_assert!(self.min_exp >= 0, "cleared evaluation needs an ordinary polynomial");
        let one = BigInt::from(1);
        if self.coeffs.is_empty() {
            return (vec![BigInt::from(0); points.len()], one);
        }
        let denom = self
            .coeffs
            .iter()
            .fold(one, |acc, c| acc.lcm(c.denom()));
        let cleared: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        let nums = points
            .iter()
            .map(|&t| {
                let t = BigInt::from(t);
                let mut acc = BigInt::from(0);
                for c in cleared.iter().rev() {
                    acc = acc * &t + c;
                }
                for _ in 0..self.min_exp {
                    acc *= &t;
                }
                acc
            })
            .collect();
        (nums, denom)
    }

    /// Substitutes f into self: returns self(f(x)). The receiver must be an
    /// ordinary polynomial; f may be any Laurent polynomial.
    pub fn compose(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        if !self.is_ordinary() {
            return Err(Error::ComposeWithLaurent);
        }
        // Horner in f.
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * f) + &LaurentPoly::constant(c.clone());
        }
        // Ordinary receivers have min_exp >= 0; fold in the remaining f^min_exp.
        for _ in 0..self.min_exp {
            acc = &acc * f;
        }
        Ok(acc)
    }

    /// self(-x): flips the sign of every odd-exponent coefficient.
    pub fn negate_argument(&self) -> LaurentPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if (self.min_exp + j as i64).rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        LaurentPoly::new(self.min_exp, coeffs)
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![Rational::zero(); (hi - lo) as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + j] = c.clone();
        }
        for (j, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.min_exp - lo) as usize + j];
            *slot = &*slot + c;
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut coeffs[i + j];
                *slot = &*slot + a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Math-style rendering, descending powers: "x^3 - 3*x", "x^-2 + 1/2".
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag.is_one() => write!(f, "x^{e}")?,
                _ => write!(f, "{mag}*x^{e}")?,
            }
        }
        Ok(())
    }
}
