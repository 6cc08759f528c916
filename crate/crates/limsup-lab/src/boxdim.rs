use std::ops::RangeInclusive;

use crate::intervals::grid_cell_count;
use crate::{LimsupError, Result};

/// Fits need this many scales before a slope means anything.
pub const MIN_SCALES: usize = 4;

/// A box-counting fit: samples `(delta, N(delta))`, the least-squares slope
/// of `log2 N` against `log2(1/delta)`, and the root-mean-square residual of
/// the fit.
#[derive(Clone, Debug)]
pub struct DimensionEstimate {
    pub samples: Vec<(f64, u64)>,
    pub slope: f64,
    pub intercept: f64,
    pub residual: f64,
}

/// Least-squares box-counting dimension from `(delta, count)` samples.
/// Scales must decrease strictly and counts must be positive and
/// non-decreasing as the grid refines.
///
/// # Errors
///
/// [`LimsupError::TooFewScales`], [`LimsupError::ScalesNotDecreasing`],
/// [`LimsupError::EmptyBoxCount`], or [`LimsupError::CountsDecreasing`] when
/// the samples violate those preconditions.
pub fn box_dimension(samples: &[(f64, u64)]) -> Result<DimensionEstimate> {
    if samples.len() < MIN_SCALES {
        return Err(LimsupError::TooFewScales {
            got: samples.len(),
            need: MIN_SCALES,
        });
    }
    for (i, &(delta, count)) in samples.iter().enumerate() {
        if !(delta.is_finite() && delta > 0.0)
            || (i > 0 && delta >= samples[i - 1].0)
        {
            return Err(LimsupError::ScalesNotDecreasing { index: i });
        }
        if count == 0 {
            return Err(LimsupError::EmptyBoxCount { index: i });
        }
        if i > 0 && count < samples[i - 1].1 {
            return Err(LimsupError::CountsDecreasing { index: i });
        }
    }

    let xs: Vec<f64> = samples.iter().map(|&(d, _)| -d.log2()).collect();
    let ys: Vec<f64> = samples.iter().map(|&(_, n)| (n as f64).log2()).collect();
    let len = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / len;
    let mean_y = ys.iter().sum::<f64>() / len;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual = (xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum::<f64>()
        / len)
        .sqrt();

    Ok(DimensionEstimate {
        samples: samples.to_vec(),
        slope,
        intercept,
        residual,
    })
}

/// Box counts of a merged interval list on dyadic grids `delta = 2^-j` for
/// j in the given range.
///
/// # Errors
///
/// [`LimsupError::EmptyLevelRange`] when the range is empty.
pub fn dyadic_box_samples(
    merged: &[(f64, f64)],
    j_range: RangeInclusive<u32>,
) -> Result<Vec<(f64, u64)>> {
    if j_range.is_empty() {
        return Err(LimsupError::EmptyLevelRange);
    }
    let mut samples = Vec::new();
    for j in j_range {
        let delta = 0.5f64.powi(j as i32);
        samples.push((delta, grid_cell_count(merged, delta)?));
    }
    Ok(samples)
}

/// Matched-scale box counts for a truncated shrinking-target family: the
/// level-n union is counted at its own natural scale
/// `delta_n = 4^(-n (1 + s))`.
///
/// # Errors
///
/// [`LimsupError::NonPositiveScale`] unless `s` is positive and finite,
/// [`LimsupError::EmptyLevelRange`] without levels.
pub fn limsup_scale_samples(
    levels: &[(u32, &[(f64, f64)])],
    s: f64,
) -> Result<Vec<(f64, u64)>> {
    if !(s.is_finite() && s > 0.0) {
        return Err(LimsupError::NonPositiveScale { s });
    }
    if levels.is_empty() {
        return Err(LimsupError::EmptyLevelRange);
    }
    let mut samples = Vec::with_capacity(levels.len());
    for &(n, union) in levels {
        let delta = f64::exp2(-2.0 * f64::from(n) * (1.0 + s));
        samples.push((delta, grid_cell_count(union, delta)?));
    }
    Ok(samples)
}

/// The level-`depth` construction intervals of the middle-third Cantor set.
#[must_use]
pub fn cantor_intervals(depth: u32) -> Vec<(f64, f64)> {
    let mut intervals = vec![(0.0, 1.0)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(intervals.len() * 2);
        for (a, b) in intervals {
            let w = (b - a) / 3.0;
            next.push((a, a + w));
            next.push((b - w, b));
        }
        intervals = next;
    }
    intervals
}
