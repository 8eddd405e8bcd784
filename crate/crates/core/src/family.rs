//! The generalized hypergeometric Appell family A_n^(k)(m, x) and its four
//! equivalent constructions.
//!
//! A family is fixed by hypergeometric parameter lists a_1..a_p / b_1..b_q,
//! an order k ≥ 1, and a rational m. Its n-th member admits:
//!
//! 1. the standard-basis sum
//!    `A_n = Σ_{i=0}^{⌊n/k⌋} n! (-1)^{ki} γ^i m^i / (i! k^{ki} (n-ki)!) · x^{n-ki}`,
//! 2. the Laurent expansion `x^n · F(m/x^k)` with the Δ(k,-n) parameter block,
//! 3. extraction of the t^n coefficient of the product A(t)·e^{xt}, where
//!    `A(t) = F((-1)^k m t^k / k^k)` is a scalar power series, and
//! 4. the differential operator `Σ_i (-1)^{ki} γ^i m^i / (i! k^{ki}) D^{ki}`
//!    applied to x^n.
//!
//! Here `γ^i = ∏_r (a_r)^(i) / ∏_s (b_s)^(i)` is a ratio of rising
//! factorials indexed by i, not an i-th power. All four routes must agree
//! exactly; the first is the cheapest and serves as the canonical
//! constructor, the others as verification paths.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rational::{factorial, pochhammer, Rational};
use crate::series::{exp_xt_series, TruncatedSeries};

/// Upper (a_1..a_p) and lower (b_1..b_q) hypergeometric parameter lists.
///
/// Lower parameters must not be zero or negative integers, or a Pochhammer
/// denominator would eventually vanish; this is enforced at construction.
/// Upper parameters may be anything; nonpositive integers merely terminate
/// the series early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperParams {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
}

impl HyperParams {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Result<Self> {
        if let Some(bad) = lower.iter().find(|b| b.is_nonpositive_integer()) {
            return Err(Error::LowerParamPole(bad.clone()));
        }
        Ok(HyperParams { upper, lower })
    }

    /// No parameters at all (the p = q = 0 case).
    pub fn empty() -> Self {
        HyperParams { upper: Vec::new(), lower: Vec::new() }
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    /// All parameters shifted by +1, as produced by the differentiation rule
    /// for the hypergeometric series. A valid lower list stays valid.
    pub fn shifted_up(&self) -> HyperParams {
        let bump = |v: &[Rational]| v.iter().map(|x| x + Rational::one()).collect();
        HyperParams { upper: bump(&self.upper), lower: bump(&self.lower) }
    }

    /// γ^i = ∏_r (a_r)^(i) / ∏_s (b_s)^(i); empty products are 1.
    pub fn gamma_ratio(&self, i: u32) -> Rational {
        let mut num = Rational::one();
        for a in &self.upper {
            num = num * pochhammer(a, i);
        }
        let mut den = Rational::one();
        for b in &self.lower {
            den = den * pochhammer(b, i);
        }
        num / den
    }
}

impl fmt::Display for HyperParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(f, "a=[{}] b=[{}]", join(&self.upper), join(&self.lower))
    }
}

/// The parameter array Δ(k,-n): the k ratios -n/k, -(n-1)/k, …, -(n-k+1)/k.
///
/// Exactly one entry is a nonpositive integer, namely -⌊n/k⌋, so any
/// hypergeometric sum carrying this block terminates at i = ⌊n/k⌋.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaArray {
    k: u32,
    n: u32,
    entries: Vec<Rational>,
}

impl DeltaArray {
    pub fn new(k: u32, n: u32) -> Self {
        assert!(k >= 1, "delta array requires k >= 1");
        let entries = (0..k)
            .map(|j| Rational::new(-(i64::from(n) - i64::from(j)), i64::from(k)))
            .collect();
        DeltaArray { k, n, entries }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// The product Δ_1(k,-n) of all k entries.
    pub fn product(&self) -> Rational {
        self.entries
            .iter()
            .fold(Rational::one(), |acc, e| acc * e)
    }
}

/// Terminating (or explicitly truncated) evaluation of the hypergeometric sum
///
/// ```text
/// Σ_{i=0}^{max_terms}  ∏_r (a_r)^(i) · ∏_e (extra_e)^(i)
///                      ─────────────────────────────────  z^i / i!
///                              ∏_s (b_s)^(i)
/// ```
///
/// `extra_upper` typically carries a Δ(k,-n) block whose nonpositive-integer
/// entry cuts the sum off; otherwise `max_terms` acts as a truncation depth.
pub fn pfq_terminating(
    params: &HyperParams,
    extra_upper: &[Rational],
    z: &Rational,
    max_terms: u32,
) -> Result<Rational> {
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for i in 0..max_terms {
        let i_rat = Rational::from(i);
        for a in params.upper().iter().chain(extra_upper) {
            term = term * (a + &i_rat);
        }
        for b in params.lower() {
            let factor = b + &i_rat;
            if factor.is_zero() {
                return Err(Error::LowerParamPole(b.clone()));
            }
            term = term / factor;
        }
        term = term * z / Rational::from(i + 1);
        if term.is_zero() {
            break;
        }
        sum = sum + &term;
    }
    Ok(sum)
}

/// The terminating sum F(a‥; b‥; Δ(k,-ν) block; m/x^k) expanded over powers
/// of x^{-k}: the i-th term contributes γ^i · ∏_d (d)^(i) · m^i / i! at
/// exponent -ki, with d running over the Δ(k,-ν) entries. The block's
/// nonpositive-integer entry cuts the sum at i = ⌊ν/k⌋.
pub fn delta_hyper_series(
    params: &HyperParams,
    k: u32,
    nu: u32,
    m: &Rational,
) -> LaurentPoly {
    let delta = DeltaArray::new(k, nu);
    let mut sum = LaurentPoly::zero();
    for i in 0..=nu / k {
        let mut c = params.gamma_ratio(i) * m.pow(i64::from(i)) / factorial(i);
        for d in delta.entries() {
            c = c * pochhammer(d, i);
        }
        sum = &sum + &LaurentPoly::monomial(-i64::from(k * i), c);
    }
    sum
}

/// A fully determined family: parameter lists, order k ≥ 1, and m.
///
/// m is allowed to be any exact rational. The classical reductions need
/// values like m = -2 (probabilists' Hermite) and m = (-1)^k h k^k
/// (Gould-Hopper), so restricting m to naturals would exclude the named
/// special cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    params: HyperParams,
    k: u32,
    m: Rational,
}

impl FamilySpec {
    pub fn new(params: HyperParams, k: u32, m: Rational) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroFamilyOrder);
        }
        Ok(FamilySpec { params, k, m })
    }

    pub fn params(&self) -> &HyperParams {
        &self.params
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    /// The same family with m replaced (used by the odd-k symmetry law).
    pub fn with_m(&self, m: Rational) -> FamilySpec {
        FamilySpec { params: self.params.clone(), k: self.k, m }
    }

    /// Standard-basis coefficient of x^{n-ki}:
    /// n! (-1)^{ki} γ^i m^i / (i! k^{ki} (n-ki)!).
    fn basis_coefficient(&self, n: u32, i: u32) -> Rational {
        let ki = self.k * i;
        let sign = if ki % 2 == 0 { Rational::one() } else { -Rational::one() };
        let num = factorial(n)
            * sign
            * self.params.gamma_ratio(i)
            * self.m.pow(i64::from(i));
        let den = factorial(i)
            * Rational::from(i64::from(self.k)).pow(i64::from(ki))
            * factorial(n - ki);
        num / den
    }

    /// The n-th member over the standard basis, the canonical constructor.
    /// Always a monic ordinary polynomial of degree n, supported on
    /// exponents n, n-k, n-2k, …
    pub fn polynomial(&self, n: u32) -> LaurentPoly {
        let mut coeffs = vec![Rational::zero(); n as usize + 1];
        for i in 0..=n / self.k {
            coeffs[(n - self.k * i) as usize] = self.basis_coefficient(n, i);
        }
        LaurentPoly::new(0, coeffs)
    }

    /// The n-th member built literally as x^n · F(m/x^k): the terminating
    /// hypergeometric sum is expanded in powers of x^{-k} and only then
    /// shifted by x^n. Must equal `polynomial(n)` exactly.
    pub fn laurent_form(&self, n: u32) -> LaurentPoly {
        let f = delta_hyper_series(&self.params, self.k, n, &self.m);
        &LaurentPoly::x_pow(i64::from(n)) * &f
    }

    /// The exponential generating series A(t) = F((-1)^k m t^k / k^k) as a
    /// scalar series: the t^{kr} coefficient is γ^r (-1)^{kr} m^r / (k^{kr} r!),
    /// all other coefficients vanish.
    pub fn generating_series(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        let mut r = 0u32;
        while (self.k * r) as usize <= order {
            let kr = self.k * r;
            let sign = if kr % 2 == 0 { Rational::one() } else { -Rational::one() };
            let c = self.params.gamma_ratio(r) * sign * self.m.pow(i64::from(r))
                / (Rational::from(i64::from(self.k)).pow(i64::from(kr)) * factorial(r));
            coeffs[kr as usize] = LaurentPoly::constant(c);
            r += 1;
        }
        TruncatedSeries::new(order, coeffs)
    }

    /// The n-th member read off the generating function: n! times the t^n
    /// coefficient of A(t)·e^{xt}. Independent of `polynomial`, which never
    /// touches the series engine.
    pub fn from_generating_series(&self, n: u32) -> LaurentPoly {
        let product = &self.generating_series(n as usize) * &exp_xt_series(n as usize);
        product.coeff(n as usize).scale(&factorial(n))
    }

    /// The n-th member via the operator Σ_i (-1)^{ki} γ^i m^i/(i! k^{ki}) D^{ki}
    /// applied to x^n, with D^{ki} realized by repeated differentiation.
    pub fn from_diff_operator(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        let mut derivative_power = LaurentPoly::x_pow(i64::from(n));
        for i in 0..=n / self.k {
            let ki = self.k * i;
            let sign = if ki % 2 == 0 { Rational::one() } else { -Rational::one() };
            let c = sign * self.params.gamma_ratio(i) * self.m.pow(i64::from(i))
                / (factorial(i) * Rational::from(i64::from(self.k)).pow(i64::from(ki)));
            acc = &acc + &derivative_power.scale(&c);
            if i < n / self.k {
                for _ in 0..self.k {
                    derivative_power = derivative_power.derivative();
                }
            }
        }
        acc
    }

    /// The n-th member composed over an inner polynomial: A_n(m, f(x)).
    pub fn composed(&self, n: u32, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.polynomial(n).compose(f)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={} m={}", self.params, self.k, self.m)
    }
}
