use crate::{Result, SeparationError};

/// Minimum pairwise distance of a 1D cloud, by sorting.
///
/// # Errors
///
/// Needs at least two points.
pub fn min_gap(points: &[f64]) -> Result<f64> {
    if points.len() < 2 {
        return Err(SeparationError::TooFewPoints { got: points.len() });
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut best = f64::INFINITY;
    for pair in sorted.windows(2) {
        best = best.min(pair[1] - pair[0]);
    }
    Ok(best)
}

/// Minimum pairwise distance of a d-dimensional cloud via a sweep ordered
/// by the first coordinate: pairs are compared only while their first
/// coordinates differ by at most the best distance found so far.
///
/// # Errors
///
/// Needs at least two points of equal dimension.
pub fn min_gap_nd(points: &[Vec<f64>]) -> Result<f64> {
    if points.len() < 2 {
        return Err(SeparationError::TooFewPoints { got: points.len() });
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
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i][0].total_cmp(&points[j][0]));
    let mut best2 = f64::INFINITY;
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            let dx = points[j][0] - points[i][0];
            if dx * dx > best2 {
                break;
            }
            best2 = best2.min(dist2(&points[i], &points[j]));
        }
    }
    Ok(best2.sqrt())
}

/// Number of ordered pairs `(i, j)`, `i != j`, at distance `<= r`
/// (inclusive). Total in `r`: negative radii simply count nothing.
#[must_use]
pub fn near_pair_count(points: &[f64], r: f64) -> usize {
    if r.is_nan() {
        return 0;
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut unordered = 0usize;
    let mut lo = 0usize;
    for hi in 1..sorted.len() {
        while lo < hi && sorted[hi] - sorted[lo] > r {
            lo += 1;
        }
        unordered += hi - lo;
    }
    unordered * 2
}

/// As [`near_pair_count`] in dimension d, by the first-coordinate sweep.
///
/// # Errors
///
/// Rejects mixed dimensions.
pub fn near_pair_count_nd(points: &[Vec<f64>], r: f64) -> Result<usize> {
    if points.is_empty() {
        return Ok(0);
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
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i][0].total_cmp(&points[j][0]));
    let mut unordered = 0usize;
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            let dx = points[j][0] - points[i][0];
            if dx > r {
                break;
            }
            if dist2(&points[i], &points[j]) <= r * r {
                unordered += 1;
            }
        }
    }
    Ok(unordered * 2)
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}
