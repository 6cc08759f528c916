use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use contfrac::TSpec;
use phit::{
    detect_overlap, dichotomy_report, images_exact, min_gap_brute, min_gap_exact, pair_to_word,
    separation_records, word_to_pair, OverlapVerdict, PhiTSystem,
};
use symbolic::Word;

fn periodic_spec() -> impl Strategy<Value = TSpec> {
    (
        proptest::collection::vec(1u64..=9, 0..=3),
        proptest::collection::vec(1u64..=9, 1..=6),
    )
        .prop_map(|(preperiod, period)| TSpec::Periodic { preperiod, period })
}

fn rational_spec() -> impl Strategy<Value = TSpec> {
    (1u64..=31, 1u64..=31).prop_map(|(x, y)| {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        TSpec::Rational(Ratio::new(BigInt::from(a), BigInt::from(b)))
    })
}

fn any_spec() -> impl Strategy<Value = TSpec> {
    prop_oneof![periodic_spec(), rational_spec()]
}

proptest! {
    #[test]
    fn words_and_coordinates_are_in_bijection(digits in proptest::collection::vec(1u8..=4, 1..=8)) {
        let word = Word::new(digits, 4).unwrap();
        let (p, q) = word_to_pair(&word).unwrap();
        let n = word.len() as u32;
        prop_assert!(p < (1u64 << n) && q < (1u64 << n));
        let back = pair_to_word(p, q, n).unwrap();
        prop_assert_eq!(back, word);
    }

    #[test]
    fn gap_closed_form_matches_enumeration(spec in any_spec(), n in 1u32..=5) {
        let sys = PhiTSystem::new(spec).unwrap();
        let closed = min_gap_exact(&sys, n).unwrap();
        let brute = min_gap_brute(&sys, n).unwrap();
        let diff = (closed.value - brute.value).abs();
        let tolerance = Ratio::new(BigInt::from(1), BigInt::from(1) << 100);
        prop_assert!(diff <= tolerance);
    }

    #[test]
    fn coincidence_scan_matches_coordinate_criterion(spec in rational_spec()) {
        let sys = PhiTSystem::new(spec).unwrap();
        let brute = phit::min_gap_brute(&sys, 4).unwrap();
        let scan_hit = brute.value.is_zero();
        let criterion_hit = matches!(
            detect_overlap(&sys, 4).unwrap(),
            OverlapVerdict::Overlap { .. }
        );
        prop_assert_eq!(scan_hit, criterion_hit);
    }

    #[test]
    fn minimal_gap_obeys_the_pigeonhole_bound(spec in any_spec(), n in 1u32..=8) {
        let sys = PhiTSystem::new(spec).unwrap();
        let gap = min_gap_exact(&sys, n).unwrap().value_f64();
        let spread = 1.0 + sys.t_f64();
        let count = 4f64.powi(n as i32);
        prop_assert!(gap <= spread / (count - 1.0) * (1.0 + 1e-9));
    }

    #[test]
    fn image_values_stay_inside_the_attractor(spec in any_spec(), n in 1u32..=6) {
        let sys = PhiTSystem::new(spec).unwrap();
        let (lo, hi) = sys.attractor();
        for point in images_exact(&sys, n).unwrap() {
            let value = point.value_f64(&sys);
            prop_assert!(value >= lo - 1e-12 && value <= hi + 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn separation_counts_are_consistent(spec in any_spec(), n in 1u32..=4) {
        let sys = PhiTSystem::new(spec).unwrap();
        let s = Ratio::new(BigInt::from(1), BigInt::from(8));
        let records = separation_records(&sys, &s, n..=n).unwrap();
        let record = &records[0];
        prop_assert_eq!(record.cardinality, 1usize << (2 * n));
        prop_assert!(record.separated >= 1 && record.separated <= record.cardinality);
        prop_assert!(record.ratio > 0.0 && record.ratio <= 1.0);
        prop_assert_eq!(record.near_pairs % 2, 0);
        // Each point within the radius of a survivor knocks out at most
        // one candidate, so the deficit is bounded by the near pairs.
        prop_assert!(record.cardinality - record.separated <= record.near_pairs);
    }

    #[test]
    fn covered_windows_always_contain_an_optimal_level(spec in any_spec(), n_max in 1u32..=10) {
        let sys = PhiTSystem::new(spec).unwrap();
        let report = dichotomy_report(&sys, n_max).unwrap();
        prop_assert!(!report.window_covered || report.optimal_exists);
        for level in &report.levels {
            prop_assert!(!level.predicted_good || level.optimal);
        }
        prop_assert!(report.discrepancies.is_empty());
    }
}
