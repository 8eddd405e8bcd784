//! Identity checks swept over parameter combinations beyond the single
//! instances frozen in the unit tests.

use proptest::prelude::*;

use hyperappell::{
    check_addition, check_appell_derivative, check_composed_derivative, check_convolution,
    check_corollary1, check_index_interchange, check_multiplication, check_parity,
    connection_coefficients, ConnectionDirection, FamilySpec, HyperParams, LaurentPoly, Rational,
};

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn sample_specs() -> Vec<FamilySpec> {
    let combos: Vec<(Vec<Rational>, Vec<Rational>)> = vec![
        (vec![], vec![]),
        (vec![rat(1, 2)], vec![]),
        (vec![], vec![rat(7, 1)]),
        (vec![rat(2, 1), rat(5, 3)], vec![rat(1, 1), rat(1, 2)]),
    ];
    let mut specs = Vec::new();
    for (upper, lower) in combos {
        for k in 1..=4u32 {
            for m in [rat(-2, 1), rat(-1, 2), rat(3, 1)] {
                let params = HyperParams::new(upper.clone(), lower.clone()).unwrap();
                specs.push(FamilySpec::new(params, k, m).unwrap());
            }
        }
    }
    specs
}

#[test]
fn derivative_rule_sweep() {
    for spec in sample_specs() {
        for n in 1..=20u32 {
            assert!(check_appell_derivative(&spec, n).holds, "{spec} n={n}");
        }
    }
}

#[test]
fn corollary1_sweep() {
    for spec in sample_specs() {
        for n in 1..=12u32 {
            assert!(check_corollary1(&spec, n).holds, "{spec} n={n}");
        }
    }
}

#[test]
fn addition_sweep() {
    for spec in sample_specs().into_iter().step_by(3) {
        for n in 0..=8u32 {
            assert!(check_addition(&spec, n).holds, "{spec} n={n}");
        }
    }
}

#[test]
fn multiplication_sweep() {
    let scales = [rat(-2, 1), rat(-1, 2), rat(0, 1), rat(1, 1), rat(3, 1)];
    for spec in sample_specs().into_iter().step_by(3) {
        for n in 0..=8u32 {
            for m_scale in &scales {
                assert!(
                    check_multiplication(&spec, n, m_scale).holds,
                    "{spec} n={n} M={m_scale}"
                );
            }
        }
    }
}

#[test]
fn interchange_sweep() {
    let params = [
        HyperParams::empty(),
        HyperParams::new(vec![rat(1, 2)], vec![rat(7, 1)]).unwrap(),
    ];
    for p in &params {
        for m in [rat(-2, 1), rat(1, 1)] {
            for k1 in 1..=3u32 {
                for k2 in 1..=3u32 {
                    for n in 0..=8u32 {
                        assert!(
                            check_index_interchange(p, &m, k1, k2, n).holds,
                            "{p} m={m} k1={k1} k2={k2} n={n}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn convolution_sweep_against_series_oracle() {
    for spec in sample_specs() {
        for n in 0..=10u32 {
            let report = check_convolution(&spec, n);
            assert!(report.holds, "{spec} n={n}");
            // Even orders reproduce the recorded closed form as well.
            if spec.k() % 2 == 0 && n % spec.k() == 0 {
                assert!(
                    report.note.starts_with("paper-RHS agrees"),
                    "{spec} n={n}: {}",
                    report.note
                );
            }
        }
    }
}

#[test]
fn parity_sweep() {
    for spec in sample_specs() {
        for n in 0..=16u32 {
            assert!(check_parity(&spec, n).holds, "{spec} n={n}");
        }
    }
}

#[test]
fn composed_derivative_sweep() {
    let inners = [
        LaurentPoly::x_pow(1),
        LaurentPoly::new(0, vec![rat(5, 1), rat(1, 1)]),
        LaurentPoly::new(0, vec![rat(1, 1), rat(0, 1), rat(1, 1)]),
        LaurentPoly::new(0, vec![rat(0, 1), rat(-1, 2), rat(0, 1), rat(3, 1)]),
    ];
    for spec in sample_specs().into_iter().step_by(5) {
        for f in &inners {
            for n in 1..=6u32 {
                assert!(check_composed_derivative(&spec, n, f).holds, "{spec} n={n} f={f}");
            }
        }
    }
}

#[test]
fn connection_directions_are_mutual_inverses() {
    // Convolving the two coefficient sequences must give 1, 0, 0, ...
    for spec in sample_specs() {
        let order = 10usize;
        let forward =
            connection_coefficients(&spec, order as u32, ConnectionDirection::FamilyOverMonomials)
                .unwrap();
        let backward =
            connection_coefficients(&spec, order as u32, ConnectionDirection::MonomialsOverFamily)
                .unwrap();
        for s in 0..=order {
            let mut conv = Rational::zero();
            for j in 0..=s {
                conv = conv + &forward[j] * &backward[s - j];
            }
            let expected = if s == 0 { Rational::one() } else { Rational::zero() };
            assert_eq!(conv, expected, "{spec} order {s}");
        }
    }
}

#[test]
fn connection_reconstructs_each_basis_over_the_other() {
    use hyperappell::factorial;
    for spec in sample_specs().into_iter().step_by(4) {
        let top = 8u32;
        let forward =
            connection_coefficients(&spec, top, ConnectionDirection::FamilyOverMonomials).unwrap();
        let backward =
            connection_coefficients(&spec, top, ConnectionDirection::MonomialsOverFamily).unwrap();
        for n in 0..=top {
            let mut member = LaurentPoly::zero();
            let mut monomial = LaurentPoly::zero();
            for mp in 0..=n {
                let weight = factorial(n) / factorial(mp);
                let fwd = &weight * &forward[(n - mp) as usize];
                member = &member + &LaurentPoly::monomial(i64::from(mp), fwd);
                let bwd = weight * &backward[(n - mp) as usize];
                monomial = &monomial + &spec.polynomial(mp).scale(&bwd);
            }
            assert_eq!(member, spec.polynomial(n), "{spec} n={n} family side");
            assert_eq!(monomial, LaurentPoly::x_pow(i64::from(n)), "{spec} n={n} monomial side");
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
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_rule_holds_for_random_specs(spec in arb_spec(), n in 1..=16u32) {
        prop_assert!(check_appell_derivative(&spec, n).holds);
    }

    #[test]
    fn corollary1_holds_for_random_specs(spec in arb_spec(), n in 1..=10u32) {
        prop_assert!(check_corollary1(&spec, n).holds);
    }

    #[test]
    fn parity_holds_for_random_specs(spec in arb_spec(), n in 0..=12u32) {
        prop_assert!(check_parity(&spec, n).holds);
    }
}
