//! Cross-checks of the four member constructions against each other and
//! against the scalar hypergeometric evaluator, over a lattice of parameter
//! lists, orders, and m values.

use proptest::prelude::*;

use hyperappell::{
    pfq_terminating, DeltaArray, FamilySpec, HyperParams, LaurentPoly, Rational,
};

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Parameter pool {1/2, 1, 2, 5/3, 7} arranged into p, q in {0, 1, 2},
/// crossed with k in 1..=4 and m in {-2, -1/2, 1, 3}.
fn lattice() -> Vec<FamilySpec> {
    let uppers: [&[Rational]; 3] = [&[], &[rat(1, 2)], &[rat(2, 1), rat(5, 3)]];
    let lowers: [&[Rational]; 3] = [&[], &[rat(7, 1)], &[rat(1, 1), rat(1, 2)]];
    let ms = [rat(-2, 1), rat(-1, 2), rat(1, 1), rat(3, 1)];

    let mut specs = Vec::new();
    for upper in &uppers {
        for lower in &lowers {
            for k in 1..=4u32 {
                for m in &ms {
                    let params = HyperParams::new(upper.to_vec(), lower.to_vec()).unwrap();
                    specs.push(FamilySpec::new(params, k, m.clone()).unwrap());
                }
            }
        }
    }
    specs
}

#[test]
fn four_constructions_agree_on_the_lattice() {
    for spec in lattice() {
        for n in 0..=16u32 {
            let canonical = spec.polynomial(n);
            assert_eq!(canonical, spec.laurent_form(n), "{spec} n={n} laurent");
            assert_eq!(canonical, spec.from_generating_series(n), "{spec} n={n} series");
            assert_eq!(canonical, spec.from_diff_operator(n), "{spec} n={n} operator");
        }
    }
}

#[test]
fn member_values_match_scalar_hypergeometric_evaluation() {
    // A_n(m, x0) = x0^n * F(a..; b..; delta block; m / x0^k) for x0 != 0.
    let points = [rat(1, 1), rat(-2, 1), rat(3, 2), rat(-1, 3)];
    for spec in lattice().into_iter().step_by(7) {
        for n in [0u32, 1, 5, 9] {
            let member = spec.polynomial(n);
            let delta = DeltaArray::new(spec.k(), n);
            for x0 in &points {
                let z = spec.m() / x0.pow(i64::from(spec.k()));
                let f = pfq_terminating(spec.params(), delta.entries(), &z, n + 1).unwrap();
                let expected = x0.pow(i64::from(n)) * f;
                assert_eq!(member.eval(x0).unwrap(), expected, "{spec} n={n} x0={x0}");
            }
        }
    }
}

#[test]
fn members_below_first_correction_are_monomials() {
    for spec in lattice() {
        for n in 0..spec.k() {
            assert_eq!(spec.polynomial(n), LaurentPoly::x_pow(i64::from(n)));
        }
    }
}

fn pool_value() -> impl Strategy<Value = Rational> {
    prop_oneof![
        Just(rat(1, 2)),
        Just(rat(1, 1)),
        Just(rat(2, 1)),
        Just(rat(5, 3)),
        Just(rat(7, 1)),
    ]
}

fn arb_spec() -> impl Strategy<Value = FamilySpec> {
    let params = (
        proptest::collection::vec(pool_value(), 0..=2),
        proptest::collection::vec(pool_value(), 0..=2),
    );
    (params, 1..=4u32, -6..=6i64, 1..=3i64).prop_map(|((upper, lower), k, mp, mq)| {
        let params = HyperParams::new(upper, lower).unwrap();
        FamilySpec::new(params, k, rat(mp, mq)).unwrap()
    })
}

proptest! {
    #[test]
    fn members_are_monic_with_stride_support(spec in arb_spec(), n in 0..=24u32) {
        let p = spec.polynomial(n);
        prop_assert_eq!(p.degree(), Some(i64::from(n)));
        prop_assert_eq!(p.leading_coeff(), Some(&Rational::one()));
        for (e, _) in p.terms() {
            prop_assert_eq!((i64::from(n) - e) % i64::from(spec.k()), 0);
        }
    }

    #[test]
    fn laurent_route_matches_canonical(spec in arb_spec(), n in 0..=20u32) {
        prop_assert_eq!(spec.polynomial(n), spec.laurent_form(n));
    }
}
