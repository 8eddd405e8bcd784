//! Exact rational scalars and the combinatorial primitives built on them.
//!
//! Every quantity in this crate ranges over `Rational`: an arbitrary-precision
//! fraction kept in canonical reduced form (gcd-free, positive denominator,
//! zero stored as 0/1), so equality is structural and all arithmetic is exact.
//!
//! The rising factorial (Pochhammer symbol) is
//!
//! ```text
//! x^(n) = x (x+1) ⋯ (x+n-1),    x^(0) = 1,
//! ```
//!
//! and the falling factorial is `(x)_n = x (x-1) ⋯ (x-n+1)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An arbitrary-precision rational number in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// p/q from machine integers. Panics when `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// p/q from big integers, rejecting a zero denominator.
    pub fn from_parts(p: BigInt, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(p, q)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True for 0, -1, -2, ...: the values excluded from lower parameter lists.
    pub fn is_nonpositive_integer(&self) -> bool {
        self.0.is_integer() && !self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power, with negative exponents via the exact reciprocal.
    /// Panics on 0 raised to a negative power; 0^0 = 1.
    pub fn pow(&self, exp: i64) -> Rational {
        if exp == 0 {
            return Rational::one();
        }
        if self.is_zero() {
            assert!(exp > 0, "zero to a negative power");
            return Rational::zero();
        }
        let mag = exp.unsigned_abs();
        let p = self.0.numer().pow(mag as u32);
        let q = self.0.denom().pow(mag as u32);
        if exp > 0 {
            Rational(BigRational::new_raw(p, q))
        } else {
            Rational(BigRational::new(q, p))
        }
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

/// Renders "p/q", or just "p" for integers; the sign always sits on the numerator.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parses "p/q" or "p" with an optional sign on the numerator.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let numer = BigInt::from_str(p).map_err(|_| bad())?;
        let denom = match q {
            Some(q) => BigInt::from_str(q).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);
impl_binop!(Div, div, /);

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

/// n! as an exact rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for j in 2..=i64::from(n) {
        acc *= j;
    }
    Rational::from(acc)
}

/// Rising factorial x^(n) = x (x+1) ⋯ (x+n-1); the empty product is 1.
pub fn pochhammer(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        acc = acc * &factor;
        factor = factor + Rational::one();
    }
    acc
}

/// Falling factorial (x)_n = x (x-1) ⋯ (x-n+1); the empty product is 1.
pub fn falling_factorial(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        acc = acc * &factor;
        factor = factor - Rational::one();
    }
    acc
}

/// Binomial coefficient n!/(i!(n-i)!), with the convention C(n, i) = 0 for i > n.
pub fn binomial(n: u32, i: u32) -> Rational {
    if i > n {
        return Rational::zero();
    }
    let i = i.min(n - i);
    let mut acc = BigInt::one();
    for j in 0..i64::from(i) {
        acc *= i64::from(n) - j;
    }
    let mut den = BigInt::one();
    for j in 2..=i64::from(i) {
        den *= j;
    }
    Rational(BigRational::new(acc, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -4), rat(-3, 4));
        assert_eq!(rat(0, 7), Rational::zero());
        assert_eq!(rat(-6, -3), Rational::from(2));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["-3/4", "7", "0", "1/2", "-12"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        // Non-canonical input normalizes on construction.
        assert_eq!("3/-4".parse::<Rational>().unwrap().to_string(), "-3/4");
        assert_eq!("6/4".parse::<Rational>().unwrap().to_string(), "3/2");
        assert!("x".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
    }

    #[test]
    fn checked_div_rejects_zero() {
        assert_eq!(
            rat(1, 2).checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(rat(1, 2).checked_div(&rat(1, 4)), Ok(Rational::from(2)));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(rat(2, 3).pow(0), Rational::one());
        assert_eq!(rat(2, 3).pow(3), rat(8, 27));
        assert_eq!(rat(2, 3).pow(-2), rat(9, 4));
        assert_eq!(Rational::zero().pow(0), Rational::one());
        assert_eq!(rat(-1, 2).pow(2), rat(1, 4));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), Rational::one());
        assert_eq!(pochhammer(&Rational::from(2), 3), Rational::from(24));
        assert_eq!(pochhammer(&rat(-3, 2), 2), rat(3, 4));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&Rational::from(5), 2), Rational::from(20));
        assert_eq!(falling_factorial(&Rational::from(3), 0), Rational::one());
        assert_eq!(falling_factorial(&rat(1, 2), 2), rat(-1, 4));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), Rational::from(6));
        assert_eq!(binomial(3, 5), Rational::zero());
        assert_eq!(binomial(0, 0), Rational::one());
        assert_eq!(binomial(30, 15), Rational::from(155117520));
    }

    #[test]
    fn nonpositive_integer_predicate() {
        assert!(Rational::zero().is_nonpositive_integer());
        assert!(Rational::from(-3).is_nonpositive_integer());
        assert!(!Rational::from(1).is_nonpositive_integer());
        assert!(!rat(-1, 2).is_nonpositive_integer());
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), Rational::one());
        assert_eq!(factorial(5), Rational::from(120));
    }

    // Gauss product of indexes: (-λ)^(kn) = k^(kn) ∏_{j=1..k} (-(λ-j+1)/k)^(n),
    // checked exhaustively on the stated integer box.
    #[test]
    fn gauss_product_of_indexes() {
        for lambda in 0..=30i64 {
            for k in 1..=5u32 {
                for n in 0..=6u32 {
                    let lhs = pochhammer(&Rational::from(-lambda), k * n);
                    let mut rhs = Rational::from(i64::from(k)).pow(i64::from(k * n));
                    for j in 1..=i64::from(k) {
                        let ratio = Rational::new(-(lambda - j + 1), i64::from(k));
                        rhs = rhs * pochhammer(&ratio, n);
                    }
                    assert_eq!(lhs, rhs, "λ={lambda} k={k} n={n}");
                }
            }
        }
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
    }

    proptest! {
        // Falling/rising duality: (x)_n = (-1)^n (-x)^(n).
        #[test]
        fn falling_rising_duality(x in arb_rational(), n in 0u32..=40) {
            let lhs = falling_factorial(&x, n);
            let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
            let rhs = sign * pochhammer(&-&x, n);
            prop_assert_eq!(lhs, rhs);
        }

        // x^(a+b) = x^(a) (x+a)^(b).
        #[test]
        fn pochhammer_additivity(x in arb_rational(), a in 0u32..=20, b in 0u32..=20) {
            let lhs = pochhammer(&x, a + b);
            let shifted = &x + Rational::from(i64::from(a));
            let rhs = pochhammer(&x, a) * pochhammer(&shifted, b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn parse_display_round_trip(x in arb_rational()) {
            let s = x.to_string();
            let back: Rational = s.parse().unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
