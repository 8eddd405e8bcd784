//! Independent oracles for the named special cases.
//!
//! Both constructors here deliberately avoid the family machinery: Hermite
//! goes through its three-term recurrence, Gould-Hopper through its own
//! closed form. Agreement with the corresponding `FamilySpec` members is
//! checked in tests, not assumed.

use crate::error::{Error, Result};
use crate::family::{FamilySpec, HyperParams};
use crate::poly::LaurentPoly;
use crate::rational::{factorial, Rational};

/// He_n, probabilists' normalization, by the recurrence
/// He_{n+1} = x·He_n - n·He_{n-1} with He_0 = 1, He_1 = x.
pub fn hermite_probabilists(n: u32) -> LaurentPoly {
    let x = LaurentPoly::x_pow(1);
    let mut prev = LaurentPoly::one();
    if n == 0 {
        return prev;
    }
    let mut curr = x.clone();
    for j in 1..n {
        let next = &(&x * &curr) - &prev.scale(&Rational::from(j));
        prev = curr;
        curr = next;
    }
    curr
}

/// g_n^k(x, h) = Σ_{i=0}^{⌊n/k⌋} n!/(i!(n-ki)!) · h^i · x^{n-ki},
/// the coefficient expansion of e^{xt + h t^k}.
pub fn gould_hopper(n: u32, k: u32, h: &Rational) -> LaurentPoly {
    assert!(k >= 1, "gould_hopper requires k >= 1");
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    let n_fact = factorial(n);
    for i in 0..=n / k {
        let c = &n_fact / (factorial(i) * factorial(n - k * i)) * h.pow(i64::from(i));
        coeffs[(n - k * i) as usize] = c;
    }
    LaurentPoly::new(0, coeffs)
}

/// Which special case to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    Hermite,
    GouldHopper,
}

/// The family spec a named special case lives at: p = q = 0 with
/// m = -2, k = 2 for Hermite, and m = (-1)^k · h · k^k for Gould-Hopper.
pub fn reduce_spec(kind: ReductionKind, k: u32, h: &Rational) -> Result<FamilySpec> {
    match kind {
        ReductionKind::Hermite => {
            if k != 2 {
                return Err(Error::BadReduction(k));
            }
            FamilySpec::new(HyperParams::empty(), 2, Rational::from(-2))
        }
        ReductionKind::GouldHopper => {
            let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            let m = sign * h * Rational::from(i64::from(k)).pow(i64::from(k));
            FamilySpec::new(HyperParams::empty(), k, m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn poly(coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::new(0, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn hermite_base_cases() {
        assert_eq!(hermite_probabilists(0), LaurentPoly::one());
        assert_eq!(hermite_probabilists(1), LaurentPoly::x_pow(1));
    }

    #[test]
    fn hermite_low_degrees() {
        assert_eq!(hermite_probabilists(2), poly(&[-1, 0, 1]));
        assert_eq!(hermite_probabilists(3), poly(&[0, -3, 0, 1]));
        assert_eq!(hermite_probabilists(4), poly(&[3, 0, -6, 0, 1]));
    }

    #[test]
    fn hermite_evaluation_instance() {
        let he4 = hermite_probabilists(4);
        assert_eq!(he4.eval(&Rational::from(2)).unwrap(), Rational::from(-5));
    }

    #[test]
    fn gould_hopper_examples() {
        assert_eq!(gould_hopper(3, 3, &Rational::one()), poly(&[6, 0, 0, 1]));
        // First correction term needs n >= k.
        assert_eq!(gould_hopper(2, 3, &rat(9, 7)), poly(&[0, 0, 1]));
        assert_eq!(gould_hopper(4, 2, &rat(-1, 2)), poly(&[3, 0, -6, 0, 1]));
    }

    #[test]
    fn gould_hopper_at_h_half_negative_is_hermite() {
        for n in 0..=20u32 {
            assert_eq!(gould_hopper(n, 2, &rat(-1, 2)), hermite_probabilists(n));
        }
    }

    #[test]
    fn reduce_spec_values() {
        let hermite = reduce_spec(ReductionKind::Hermite, 2, &Rational::zero()).unwrap();
        assert_eq!(hermite.k(), 2);
        assert_eq!(hermite.m(), &Rational::from(-2));
        assert!(hermite.params().upper().is_empty());
        assert!(hermite.params().lower().is_empty());

        let gh = reduce_spec(ReductionKind::GouldHopper, 3, &Rational::one()).unwrap();
        assert_eq!(gh.k(), 3);
        assert_eq!(gh.m(), &Rational::from(-27));

        // Gould-Hopper at k=2, h=-1/2 collapses onto the Hermite spec.
        let gh2 = reduce_spec(ReductionKind::GouldHopper, 2, &rat(-1, 2)).unwrap();
        assert_eq!(gh2, hermite);
    }

    #[test]
    fn reduce_spec_rejects_non_quadratic_hermite() {
        assert_eq!(
            reduce_spec(ReductionKind::Hermite, 3, &Rational::zero()),
            Err(Error::BadReduction(3))
        );
    }

    #[test]
    fn family_member_matches_hermite_oracle() {
        let spec = reduce_spec(ReductionKind::Hermite, 2, &Rational::zero()).unwrap();
        for n in 0..=20u32 {
            assert_eq!(spec.polynomial(n), hermite_probabilists(n));
        }
    }

    #[test]
    fn family_member_matches_gould_hopper_oracle() {
        for k in 1..=4u32 {
            for h in [Rational::one(), Rational::from(-1), rat(1, 2)] {
                let spec = reduce_spec(ReductionKind::GouldHopper, k, &h).unwrap();
                for n in 0..=20u32 {
                    assert_eq!(spec.polynomial(n), gould_hopper(n, k, &h), "k={k} h={h} n={n}");
                }
            }
        }
    }
}
