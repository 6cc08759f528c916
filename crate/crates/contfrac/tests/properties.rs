use std::cmp::Ordering;

use contfrac::{best_approx_error, brute_force_best_approx, ContinuedFraction, TSpec};
use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

fn periodic_spec() -> impl Strategy<Value = TSpec> {
    (
        prop::collection::vec(1u64..=9, 0..=3),
        prop::collection::vec(1u64..=9, 1..=6),
    )
        .prop_map(|(preperiod, period)| TSpec::Periodic { preperiod, period })
}

fn rational_spec() -> impl Strategy<Value = TSpec> {
    (1u64..=1000, 1u64..=1000).prop_map(|(a, b)| {
        let (num, den) = if a <= b { (a, b) } else { (b, a) };
        TSpec::Rational(Ratio::new(BigInt::from(num), BigInt::from(den)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_is_unimodular(spec in periodic_spec()) {
        let cf = ContinuedFraction::expand(&spec, 24).unwrap();
        for m in 1..=cf.depth() {
            let (p0, q0) = cf.convergent(m - 1);
            let (p1, q1) = cf.convergent(m);
            let det = q1 * p0 - p1 * q0;
            prop_assert!(det == BigInt::from(1) || det == BigInt::from(-1));
        }
    }

    #[test]
    fn sandwich_bounds_hold_exactly_for_irrationals(spec in periodic_spec()) {
        let cf = ContinuedFraction::expand(&spec, 18).unwrap();
        for m in 0..cf.depth() {
            let (p, q) = cf.convergent(m);
            let (_, q_next) = cf.convergent(m + 1);
            let upper = Ratio::new(BigInt::from(1), q_next.clone());
            let lower = Ratio::new(BigInt::from(1), q_next + q);
            prop_assert_eq!(cf.cmp_abs_linear(p, q, &upper), Ordering::Less);
            prop_assert_eq!(cf.cmp_abs_linear(p, q, &lower), Ordering::Greater);
        }
    }

    #[test]
    fn rational_expansion_reproduces_the_value(spec in rational_spec()) {
        let cf = ContinuedFraction::expand(&spec, 1).unwrap();
        let last = cf.depth();
        let (p, q) = cf.convergent(last);
        let value = match &spec {
            TSpec::Rational(v) => v.clone(),
            _ => unreachable!(),
        };
        prop_assert_eq!(Ratio::new(p.clone(), q.clone()), value);
        let quotients = cf.quotients();
        if quotients.len() > 1 {
            prop_assert!(quotients[quotients.len() - 1] >= 2);
        }
    }

    #[test]
    fn best_approx_matches_brute_force(spec in rational_spec(), bound in 1u64..=200) {
        let cf = ContinuedFraction::expand(&spec, 1).unwrap();
        let fast = best_approx_error(&cf, &BigInt::from(bound)).unwrap();
        let brute = brute_force_best_approx(&cf, bound).unwrap();
        prop_assert_eq!(fast.error, brute.error);
    }

    #[test]
    fn sign_linear_agrees_with_float_far_from_zero(
        spec in periodic_spec(),
        a in -1_000_000i64..=1_000_000,
        b in -1_000_000i64..=1_000_000,
    ) {
        let cf = ContinuedFraction::expand(&spec, 8).unwrap();
        let value = a as f64 + b as f64 * cf.to_f64();
        prop_assume!(value.abs() > 1e-3);
        let sign = cf.sign_linear(&BigInt::from(a), &BigInt::from(b));
        let expected = if value > 0.0 { Ordering::Greater } else { Ordering::Less };
        prop_assert_eq!(sign, expected);
    }
}
