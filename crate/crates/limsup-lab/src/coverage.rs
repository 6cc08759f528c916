use std::ops::RangeInclusive;

use ifs_engine::{point_cloud, Similarity1D};
use rayon::prelude::*;
use symbolic::{RateFunction, SymbolicMeasure};

use crate::balls::level_balls;
use crate::intervals::{intersection_length, kfold_measures, union_length};
use crate::{LimsupError, Result};

/// Coverage enumerates one full image cloud per level, so level windows are
/// capped to keep cloud materialization bounded.
pub const LEVEL_CAP: u32 = 10;

/// Cap on the number of hit-count grid cells.
pub const GRID_CELL_CAP: u128 = 1 << 22;

/// The second-moment bound truncates to at most this many levels, keeping the
/// pairwise intersection matrix quadratic in a small constant.
pub const KS_LEVEL_CAP: usize = 20;

/// One level of a coverage run: the merged union of its ball family and the
/// union's Lebesgue measure.
#[derive(Clone, Debug)]
pub struct LevelCoverage {
    pub n: u32,
    pub measure: f64,
    pub intervals: Vec<(f64, f64)>,
}

/// Coverage statistics over a level window. The K-fold covered measures are
/// the finite stand-in for the limsup set: measure covered by at least K of
/// the computed levels, non-increasing in K.
#[derive(Clone, Debug)]
pub struct CoverageReport {
    /// Interval certain to contain every ball in the window.
    pub ambient: (f64, f64),
    pub k_max: usize,
    pub levels: Vec<LevelCoverage>,
    /// Prefix sums of the per-level union measures, the measured side of the
    /// Borel-Cantelli comparison series.
    pub measure_partial_sums: Vec<f64>,
    /// Entry k-1 holds the measure covered by at least k levels.
    pub kfold: Vec<f64>,
    /// Second-moment (Kochen-Stone) lower bound on the measure of the set
    /// covered infinitely often, evaluated over the first `ks_levels` levels.
    pub ks_bound: f64,
    pub ks_levels: usize,
    pub grid_resolution: Option<f64>,
    /// Per-cell count of levels whose union contains the cell center, on the
    /// uniform grid over the ambient interval. Present when a resolution was
    /// requested.
    pub hit_counts: Option<Vec<u32>>,
}

impl CoverageReport {
    /// Measure of the ambient interval.
    #[must_use]
    pub fn ambient_measure(&self) -> f64 {
        self.ambient.1 - self.ambient.0
    }
}

/// Second-moment lower bound `(sum of measures)^2 / (sum of all pairwise
/// intersection measures, diagonal included)` for the measure of the points
/// lying in infinitely many of the sets. Inputs must be merged interval
/// lists; returns 0 when every set is null.
#[must_use]
pub fn ks_bound(unions: &[&[(f64, f64)]]) -> f64 {
    let total: f64 = unions.iter().map(|u| union_length(u)).sum();
    if total <= 0.0 {
        return 0.0;
    }
    let mut denom = 0.0;
    for a in unions {
        for b in unions {
            denom += intersection_length(a, b);
        }
    }
    if denom <= 0.0 {
        return 0.0;
    }
    total * total / denom
}

/// Suffix sums of the per-level measures: entry i is the tail sum over
/// levels i.. of the window, the truncated Borel-Cantelli tail.
#[must_use]
pub fn tail_union_measures(levels: &[LevelCoverage]) -> Vec<f64> {
    let mut tails = vec![0.0; levels.len()];
    let mut acc = 0.0;
    for (i, level) in levels.iter().enumerate().rev() {
        acc += level.measure;
        tails[i] = acc;
    }
    tails
}

/// Grid approximation of the k-fold covered measure: cell width times the
/// number of cells whose center is covered by at least k levels.
#[must_use]
pub fn kfold_from_hits(hits: &[u32], resolution: f64, k: u32) -> f64 {
    resolution * hits.iter().filter(|&&c| c >= k).count() as f64
}

/// Runs the full coverage pipeline for one system: per-level ball unions
/// (computed in parallel), K-fold covered measures, the second-moment lower
/// bound, and optionally a hit-count grid at the given resolution.
///
/// # Errors
///
/// [`LimsupError::EmptyLevelRange`], [`LimsupError::ZeroLevel`], and
/// [`LimsupError::LevelCap`] for a bad window; grid errors
/// ([`LimsupError::BadResolution`], [`LimsupError::GridTooFine`]) when a
/// resolution is requested that the window cannot support; construction
/// errors from level building pass through.
pub fn coverage_report(
    ifs: &Similarity1D,
    measure: &SymbolicMeasure,
    z: f64,
    h: &RateFunction,
    levels: RangeInclusive<u32>,
    resolution: Option<f64>,
    k_max: usize,
    clamp: Option<f64>,
) -> Result<CoverageReport> {
    let ns: Vec<u32> = levels.collect();
    let Some(&first) = ns.first() else {
        return Err(LimsupError::EmptyLevelRange);
    };
    if first == 0 {
        return Err(LimsupError::ZeroLevel);
    }
    let last = *ns.last().expect("non-empty window");
    if last > LEVEL_CAP {
        return Err(LimsupError::LevelCap {
            n: last,
            cap: LEVEL_CAP,
        });
    }

    let built: Vec<(LevelCoverage, f64, Option<f64>)> = ns
        .par_iter()
        .map(|&n| {
            let cloud = point_cloud(ifs, measure, n, z)?;
            let family = level_balls(&cloud, measure, h, clamp)?;
            let intervals = family.intervals();
            let level = LevelCoverage {
                n,
                measure: union_length(&intervals),
                intervals,
            };
            Ok((level, family.max_radius(), family.min_positive_radius()))
        })
        .collect::<Result<_>>()?;

    let max_radius = built.iter().map(|(_, r, _)| *r).fold(0.0, f64::max);
    let min_radius = built
        .iter()
        .filter_map(|(_, _, r)| *r)
        .min_by(f64::total_cmp);
    let (attr_lo, attr_hi) = ifs.attractor_bounds();
    let mut amb_lo = attr_lo - max_radius;
    let mut amb_hi = attr_hi + max_radius;
    for (level, _, _) in &built {
        if let Some(&(lo, _)) = level.intervals.first() {
            amb_lo = amb_lo.min(lo);
        }
        if let Some(&(_, hi)) = level.intervals.last() {
            amb_hi = amb_hi.max(hi);
        }
    }

    let levels: Vec<LevelCoverage> = built.into_iter().map(|(l, _, _)| l).collect();
    let unions: Vec<&[(f64, f64)]> = levels.iter().map(|l| l.intervals.as_slice()).collect();

    let kfold = kfold_measures(&unions, k_max);
    let ks_levels = unions.len().min(KS_LEVEL_CAP);
    let ks = ks_bound(&unions[..ks_levels]);

    let mut measure_partial_sums = Vec::with_capacity(levels.len());
    let mut acc = 0.0;
    for level in &levels {
        acc += level.measure;
        measure_partial_sums.push(acc);
    }

    let hit_counts = match resolution {
        None => None,
        Some(res) => Some(hit_count_grid(
            &unions, amb_lo, amb_hi, res, min_radius,
        )?),
    };

    Ok(CoverageReport {
        ambient: (amb_lo, amb_hi),
        k_max,
        levels,
        measure_partial_sums,
        kfold,
        ks_bound: ks,
        ks_levels,
        grid_resolution: resolution,
        hit_counts,
    })
}

/// Cells partition the ambient interval; each entry counts the levels whose
/// union contains the cell center. Chunks of the grid are filled in parallel
/// and concatenated in index order.
fn hit_count_grid(
    unions: &[&[(f64, f64)]],
    amb_lo: f64,
    amb_hi: f64,
    resolution: f64,
    min_radius: Option<f64>,
) -> Result<Vec<u32>> {
    if !(resolution.is_finite() && resolution > 0.0) {
        return Err(LimsupError::NonPositiveScale { s: resolution });
    }
    let min_radius = min_radius.unwrap_or(0.0);
    if resolution >= min_radius {
        return Err(LimsupError::BadResolution {
            resolution,
            min_radius,
        });
    }
    let span = amb_hi - amb_lo;
    let cells_wide = (span / resolution).ceil().max(1.0) as u128;
    if cells_wide > GRID_CELL_CAP {
        return Err(LimsupError::GridTooFine {
            cells: cells_wide,
            cap: GRID_CELL_CAP,
        });
    }
    let cells = cells_wide as usize;
    const CHUNK: usize = 1 << 15;
    let chunk_count = cells.div_ceil(CHUNK);
    let chunks: Vec<Vec<u32>> = (0..chunk_count)
        .into_par_iter()
        .map(|ci| {
            let start = ci * CHUNK;
            let end = cells.min(start + CHUNK);
            let mut local = vec![0u32; end - start];
            for set in unions {
                let c0 = amb_lo + (start as f64 + 0.5) * resolution;
                let mut idx = set.partition_point(|iv| iv.1 < c0);
                for (slot, cell) in local.iter_mut().zip(start..end) {
                    let c = amb_lo + (cell as f64 + 0.5) * resolution;
                    while idx < set.len() && set[idx].1 < c {
                        idx += 1;
                    }
                    if idx < set.len() && set[idx].0 <= c {
                        *slot += 1;
                    }
                }
            }
            local
        })
        .collect();
    let mut hits = Vec::with_capacity(cells);
    for chunk in chunks {
        hits.extend(chunk);
    }
    Ok(hits)
}
