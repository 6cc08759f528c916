use std::collections::HashMap;

use crate::{Result, SeparationError};

/// A strictly r-separated subset of a point cloud.
#[derive(Clone, Debug)]
pub struct SeparatedSubset {
    pub radius: f64,
    /// Indices into the source cloud, ascending.
    pub members: Vec<usize>,
    /// True when `members.len()` equals the true maximum cardinality;
    /// false when it is only a greedy lower bound.
    pub exact: bool,
    /// A packing upper bound on the true maximum, when the lower bound is
    /// not known to be tight.
    pub upper_bound: Option<usize>,
}

impl SeparatedSubset {
    #[must_use]
    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// Maximum strictly r-separated subset of a 1D cloud.
///
/// Sorts and accepts greedily left to right; by the exchange argument the
/// greedy count is the true maximum, so the result is exact. Empty input
/// yields an empty subset.
///
/// # Errors
///
/// Rejects radii that are not positive finite numbers.
pub fn max_separated(points: &[f64], r: f64) -> Result<SeparatedSubset> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(SeparationError::BadRadius { r });
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].total_cmp(&points[j]));
    let mut members = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for idx in order {
        if members.is_empty() || points[idx] - last > r {
            last = points[idx];
            members.push(idx);
        }
    }
    members.sort_unstable();
    Ok(SeparatedSubset {
        radius: r,
        members,
        exact: true,
        upper_bound: None,
    })
}

/// Greedy maximal strictly r-separated subset of a d-dimensional cloud,
/// with a packing upper bound.
///
/// Greedy insertion in input order over a cell index of side `r` gives a
/// maximal (not maximum) subset: a lower bound. Cells of side `r / sqrt(d)`
/// have diameter `r`, so a strictly separated set holds at most one point
/// per such cell; the number of occupied cells is the upper bound.
///
/// # Errors
///
/// Rejects bad radii and mixed dimensions.
pub fn max_separated_nd(points: &[Vec<f64>], r: f64) -> Result<SeparatedSubset> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(SeparationError::BadRadius { r });
    }
    if points.is_empty() {
        return Ok(SeparatedSubset {
            radius: r,
            members: Vec::new(),
            exact: true,
            upper_bound: Some(0),
        });
    }
    let dim = points[0].len();
    for (index, p) in points.iter().enumerate() {
        if p.len() != dim {
            return Err(SeparationError::MixedDimensions {
                index,
                expected: dim,
                got: p.len(),
            });
        }
    }

    // Greedy lower bound: accept a point when no accepted point within the
    // 3^d cell neighborhood lies at distance <= r.
    let cell = |p: &[f64], side: f64| -> Vec<i64> {
        p.iter().map(|&x| (x / side).floor() as i64).collect()
    };
    let mut accepted: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    let mut members = Vec::new();
    for (idx, p) in points.iter().enumerate() {
        let key = cell(p, r);
        let mut blocked = false;
        'scan: for neighbor in neighborhood(&key) {
            if let Some(bucket) = accepted.get(&neighbor) {
                for &other in bucket {
                    if dist2(p, &points[other]) <= r * r {
                        blocked = true;
                        break 'scan;
                    }
                }
            }
        }
        if !blocked {
            accepted.entry(key).or_default().push(idx);
            members.push(idx);
        }
    }

    let fine = r / (dim as f64).sqrt();
    let mut occupied: HashMap<Vec<i64>, ()> = HashMap::new();
    for p in points {
        occupied.insert(cell(p, fine), ());
    }

    Ok(SeparatedSubset {
        radius: r,
        members,
        exact: false,
        upper_bound: Some(occupied.len()),
    })
}

fn neighborhood(key: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &k in key {
        let mut next = Vec::with_capacity(out.len() * 3);
        for partial in &out {
            for delta in -1..=1 {
                let mut cell = partial.clone();
                cell.push(k + delta);
                next.push(cell);
            }
        }
        out = next;
    }
    out
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Exponential-time oracle: the true maximum strictly r-separated subset
/// size by exhaustive subset search. Intended for inputs of at most ~20
/// points.
#[must_use]
pub fn brute_force_max_separated(points: &[f64], r: f64) -> usize {
    let n = points.len();
    assert!(n <= 20, "exhaustive search is limited to 20 points");
    let mut best = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let chosen: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(k, &i)| chosen[k + 1..].iter().all(|&j| (points[i] - points[j]).abs() > r));
        if ok {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn four_point_example_with_two_survivors() {
        let pts = [0.0, 0.1, 0.25, 0.3];
        let s = max_separated(&pts, 0.12).unwrap();
        assert_eq!(s.count(), 2);
        assert!(s.exact);
        assert_eq!(s.count(), brute_force_max_separated(&pts, 0.12));
    }

    #[test]
    fn well_spread_points_all_survive() {
        let pts = [0.0, 1.0, 2.0, 3.0];
        let s = max_separated(&pts, 0.5).unwrap();
        assert_eq!(s.count(), 4);
        assert_eq!(s.members, vec![0, 1, 2, 3]);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(max_separated(&[], 0.5).unwrap().count(), 0);
        assert_eq!(max_separated(&[7.0], 0.5).unwrap().count(), 1);
        assert!(max_separated(&[0.0], 0.0).is_err());
        assert!(max_separated(&[0.0], -1.0).is_err());
        assert!(max_separated(&[0.0], f64::NAN).is_err());
    }

    #[test]
    fn ties_at_exactly_the_radius_are_excluded() {
        // Distance exactly r fails the strict comparison.
        let pts = [0.0, 0.5, 1.0];
        let s = max_separated(&pts, 0.5).unwrap();
        assert_eq!(s.count(), 2);
        assert_eq!(s.members, vec![0, 2]);
    }

    #[test]
    fn greedy_equals_brute_force_on_random_clouds() {
        let mut rng = ChaCha20Rng::seed_from_u64(0x5e9a_11ed);
        for trial in 0..40 {
            let n = rng.gen_range(2..=18);
            let pts: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
            let r = rng.gen_range(0.01..0.4);
            let greedy = max_separated(&pts, r).unwrap().count();
            let brute = brute_force_max_separated(&pts, r);
            assert_eq!(greedy, brute, "trial {trial}: pts {pts:?} r {r}");
        }
    }

    #[test]
    fn monotone_in_the_radius() {
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        let pts: Vec<f64> = (0..200).map(|_| rng.gen_range(0.0..1.0)).collect();
        let mut last = usize::MAX;
        for k in 1..=30 {
            let r = 0.002 * k as f64;
            let count = max_separated(&pts, r).unwrap().count();
            assert!(count <= last);
            last = count;
        }
    }

    #[test]
    fn grid_greedy_is_sandwiched_by_the_packing_bound() {
        let mut rng = ChaCha20Rng::seed_from_u64(0xbeef);
        for _ in 0..20 {
            let n = rng.gen_range(2..=60);
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|_| vec![rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)])
                .collect();
            let r = rng.gen_range(0.05..0.5);
            let s = max_separated_nd(&pts, r).unwrap();
            assert!(!s.exact);
            let upper = s.upper_bound.unwrap();
            assert!(s.count() <= upper);
            assert!(s.count() >= 1);
            // The greedy members really are pairwise separated.
            for (k, &i) in s.members.iter().enumerate() {
                for &j in &s.members[k + 1..] {
                    assert!(dist2(&pts[i], &pts[j]) > r * r);
                }
            }
        }
    }

    #[test]
    fn one_dimensional_grid_case_agrees_with_exact_path() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(2..=16);
            let pts: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
            let r = rng.gen_range(0.05..0.3);
            let exact = max_separated(&pts, r).unwrap().count();
            let ndpts: Vec<Vec<f64>> = pts.iter().map(|&x| vec![x]).collect();
            let greedy = max_separated_nd(&ndpts, r).unwrap();
            assert!(greedy.count() <= exact);
            assert!(exact <= greedy.upper_bound.unwrap());
        }
    }

    #[test]
    fn mixed_dimensions_are_rejected() {
        let pts = vec![vec![0.0, 0.0], vec![1.0]];
        assert!(matches!(
            max_separated_nd(&pts, 0.5),
            Err(SeparationError::MixedDimensions { index: 1, .. })
        ));
    }
}
