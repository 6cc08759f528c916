use crate::{LimsupError, Result};

/// Sorts intervals by left endpoint and merges every overlapping or touching
/// pair. Degenerate inputs (zero or negative length) are dropped. The output
/// is pairwise disjoint with strictly increasing endpoints.
#[must_use]
pub fn merge_intervals(raw: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut sorted: Vec<(f64, f64)> = raw.iter().copied().filter(|(a, b)| a < b).collect();
    sorted.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(sorted.len());
    for (lo, hi) in sorted {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    merged
}

/// Total length of a pairwise disjoint interval list.
#[must_use]
pub fn union_length(merged: &[(f64, f64)]) -> f64 {
    merged.iter().map(|(a, b)| b - a).sum()
}

/// Length of the intersection of two merged interval lists, by a two-pointer
/// sweep. Both inputs must be sorted and pairwise disjoint.
#[must_use]
pub fn intersection_length(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let mut total = 0.0;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = a[i].0.max(b[j].0);
        let hi = a[i].1.min(b[j].1);
        if hi > lo {
            total += hi - lo;
        }
        if a[i].1 <= b[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    total
}

/// Lebesgue measure of the set covered by at least k of the given interval
/// unions, for k = 1..=k_max, via one endpoint event sweep. Entry k-1 of the
/// result is the k-fold covered measure; entries are non-increasing in k.
#[must_use]
pub fn kfold_measures(unions: &[&[(f64, f64)]], k_max: usize) -> Vec<f64> {
    let mut out = vec![0.0; k_max];
    let mut events: Vec<(f64, i32)> = Vec::new();
    for set in unions {
        for &(lo, hi) in *set {
            if lo < hi {
                events.push((lo, 1));
                events.push((hi, -1));
            }
        }
    }
    if events.is_empty() || k_max == 0 {
        return out;
    }
    events.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    let mut prev = events[0].0;
    let mut depth: usize = 0;
    for (pos, delta) in events {
        if depth > 0 && pos > prev {
            let seg = pos - prev;
            for slot in out.iter_mut().take(depth.min(k_max)) {
                *slot += seg;
            }
        }
        prev = pos;
        if delta > 0 {
            depth += 1;
        } else {
            depth -= 1;
        }
    }
    out
}

/// Number of grid cells of width `delta` (anchored at 0) that a merged
/// interval list touches. Cells are indexed by floor(x / delta) and each cell
/// is counted once even when consecutive intervals share it.
///
/// # Errors
///
/// [`LimsupError::NonPositiveScale`] unless `delta` is positive and finite.
pub fn grid_cell_count(merged: &[(f64, f64)], delta: f64) -> Result<u64> {
    if !(delta.is_finite() && delta > 0.0) {
        return Err(LimsupError::NonPositiveScale { s: delta });
    }
    let mut total: u64 = 0;
    let mut last: Option<i64> = None;
    for &(a, b) in merged {
        let mut lo = (a / delta).floor() as i64;
        let hi = (b / delta).floor() as i64;
        if let Some(prev) = last {
            if lo <= prev {
                lo = prev + 1;
            }
        }
        if hi >= lo {
            total += (hi - lo + 1) as u64;
            last = Some(hi);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn merge_joins_overlapping_intervals() {
        let merged = merge_intervals(&[(0.0, 1.0), (0.5, 2.0)]);
        assert_eq!(merged, vec![(0.0, 2.0)]);
        assert!(close(union_length(&merged), 2.0, 1e-15));
    }

    #[test]
    fn merge_joins_touching_and_keeps_disjoint() {
        assert_eq!(merge_intervals(&[(0.0, 1.0), (1.0, 2.0)]), vec![(0.0, 2.0)]);
        let disjoint = merge_intervals(&[(3.0, 4.0), (0.0, 1.0)]);
        assert_eq!(disjoint, vec![(0.0, 1.0), (3.0, 4.0)]);
        assert!(close(union_length(&disjoint), 2.0, 1e-15));
    }

    #[test]
    fn merge_drops_degenerate_intervals() {
        assert!(merge_intervals(&[(1.0, 1.0), (2.0, 1.5)]).is_empty());
        assert_eq!(union_length(&[]), 0.0);
    }

    #[test]
    fn merge_absorbs_nested_intervals() {
        let merged = merge_intervals(&[(0.0, 5.0), (1.0, 2.0), (4.0, 4.5)]);
        assert_eq!(merged, vec![(0.0, 5.0)]);
    }

    #[test]
    fn intersection_of_chain_links() {
        let e1 = [(0.0, 0.4)];
        let e2 = [(0.3, 0.6)];
        let e3 = [(0.5, 0.9)];
        assert!(close(intersection_length(&e1, &e2), 0.1, 1e-15));
        assert!(close(intersection_length(&e1, &e3), 0.0, 1e-15));
        assert!(close(intersection_length(&e2, &e3), 0.1, 1e-15));
        assert!(close(intersection_length(&e1, &e1), 0.4, 1e-15));
    }

    #[test]
    fn intersection_across_multiple_pieces() {
        let a = [(0.0, 1.0), (2.0, 3.0)];
        let b = [(0.5, 2.5)];
        assert!(close(intersection_length(&a, &b), 1.0, 1e-15));
    }

    #[test]
    fn kfold_on_overlapping_chain() {
        let e1 = vec![(0.0, 0.4)];
        let e2 = vec![(0.3, 0.6)];
        let e3 = vec![(0.5, 0.9)];
        let unions: Vec<&[(f64, f64)]> = vec![&e1, &e2, &e3];
        let k = kfold_measures(&unions, 3);
        assert!(close(k[0], 0.9, 1e-12));
        assert!(close(k[1], 0.2, 1e-12));
        assert!(close(k[2], 0.0, 1e-12));
    }

    #[test]
    fn kfold_pads_with_zero_beyond_max_depth() {
        let e = vec![(0.0, 1.0)];
        let unions: Vec<&[(f64, f64)]> = vec![&e];
        let k = kfold_measures(&unions, 4);
        assert!(close(k[0], 1.0, 1e-15));
        assert_eq!(&k[1..], &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn kfold_of_identical_sets_stacks_depth() {
        let e = vec![(0.0, 0.3)];
        let unions: Vec<&[(f64, f64)]> = vec![&e, &e, &e];
        let k = kfold_measures(&unions, 3);
        for v in k {
            assert!(close(v, 0.3, 1e-12));
        }
    }

    #[test]
    fn kfold_without_events_is_zero() {
        let k = kfold_measures(&[], 2);
        assert_eq!(k, vec![0.0, 0.0]);
    }

    #[test]
    fn grid_count_of_unit_interval() {
        let n = grid_cell_count(&[(0.0, 1.0)], 1.0 / 16.0).unwrap();
        assert_eq!(n, 17);
    }

    #[test]
    fn grid_count_deduplicates_shared_cells() {
        let n = grid_cell_count(&[(0.0, 0.3), (0.35, 0.6)], 0.5).unwrap();
        assert_eq!(n, 2);
        let m = grid_cell_count(&[(0.0, 0.2), (0.25, 0.4)], 0.5).unwrap();
        assert_eq!(m, 1);
    }

    #[test]
    fn grid_count_handles_negative_coordinates() {
        let n = grid_cell_count(&[(-0.75, 0.25)], 0.5).unwrap();
        assert_eq!(n, 3);
    }

    #[test]
    fn grid_count_rejects_bad_delta() {
        assert!(matches!(
            grid_cell_count(&[(0.0, 1.0)], 0.0),
            Err(LimsupError::NonPositiveScale { .. })
        ));
        assert!(matches!(
            grid_cell_count(&[(0.0, 1.0)], f64::NAN),
            Err(LimsupError::NonPositiveScale { .. })
        ));
    }
}
