use proptest::prelude::*;
use separation::{brute_force_max_separated, max_separated, min_gap, near_pair_count};

fn cloud() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, 2..=12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn greedy_is_maximum(points in cloud(), r in 0.01f64..0.6) {
        let greedy = max_separated(&points, r).unwrap();
        prop_assert!(greedy.exact);
        prop_assert_eq!(greedy.count(), brute_force_max_separated(&points, r));
    }

    #[test]
    fn separated_members_really_are_separated(points in cloud(), r in 0.01f64..0.6) {
        let subset = max_separated(&points, r).unwrap();
        for (k, &i) in subset.members.iter().enumerate() {
            for &j in &subset.members[k + 1..] {
                prop_assert!((points[i] - points[j]).abs() > r);
            }
        }
    }

    #[test]
    fn count_is_monotone_nonincreasing_in_radius(points in cloud()) {
        let mut last = usize::MAX;
        for k in 1..=20 {
            let r = 0.03 * k as f64;
            let count = max_separated(&points, r).unwrap().count();
            prop_assert!(count <= last);
            last = count;
        }
    }

    #[test]
    fn survivor_deficit_is_bounded_by_near_pairs(points in cloud(), r in 0.01f64..0.6) {
        let t = max_separated(&points, r).unwrap().count();
        let near = near_pair_count(&points, r);
        prop_assert!(points.len() - t <= near);
    }

    #[test]
    fn near_pairs_match_quadratic_reference(points in cloud(), r in 0.0f64..0.8) {
        let mut expected = 0usize;
        for i in 0..points.len() {
            for j in 0..points.len() {
                if i != j && (points[i] - points[j]).abs() <= r {
                    expected += 1;
                }
            }
        }
        prop_assert_eq!(near_pair_count(&points, r), expected);
    }

    #[test]
    fn min_gap_matches_quadratic_reference(points in cloud()) {
        let mut best = f64::INFINITY;
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                best = best.min((points[i] - points[j]).abs());
            }
        }
        prop_assert_eq!(min_gap(&points).unwrap(), best);
    }
}
