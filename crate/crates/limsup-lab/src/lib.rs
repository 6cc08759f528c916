//! Truncated limsup-set coverage laboratory: ball families around image
//! clouds, exact interval-union measures in one dimension, K-fold covered
//! measure as the finite stand-in for "infinitely many levels", Kochen-Stone
//! second-moment lower bounds, volume-sum classification, and box-counting
//! dimension estimates.
//!
//! One-dimensional measures are exact up to floating-point rounding: unions
//! are sort-merges of interval endpoints and intersections are two-pointer
//! sweeps. Higher dimensions fall back to seeded Monte Carlo with a reported
//! standard error.

#![forbid(unsafe_code)]

mod balls;
mod boxdim;
mod coverage;
mod intervals;
mod volume;

pub use balls::{level_balls, union_measure, union_measure_many, union_measure_nd, BallFamily, Radii};
pub use boxdim::{
    box_dimension, cantor_intervals, dyadic_box_samples, limsup_scale_samples, DimensionEstimate,
};
pub use coverage::{
    coverage_report, kfold_from_hits, ks_bound, tail_union_measures, CoverageReport,
    LevelCoverage, GRID_CELL_CAP, KS_LEVEL_CAP, LEVEL_CAP,
};
pub use intervals::{
    grid_cell_count, intersection_length, kfold_measures, merge_intervals, union_length,
};
pub use volume::{mt_predict, volume_sum, VolumeSum};

/// Errors from coverage, volume-sum, and dimension computations.
#[derive(Debug, thiserror::Error)]
pub enum LimsupError {
    /// Level windows start at 1; level 0 indexes the empty word alone.
    #[error("level 0 is not a valid coverage level")]
    ZeroLevel,

    /// Level windows must contain at least one level.
    #[error("empty level window")]
    EmptyLevelRange,

    /// Coverage enumerates full image clouds, so levels are capped.
    #[error("level {n} exceeds the coverage cap {cap}")]
    LevelCap { n: u32, cap: u32 },

    /// Hit-count grids must resolve the smallest ball in the window.
    #[error("grid resolution {resolution} is not below the smallest radius {min_radius}")]
    BadResolution { resolution: f64, min_radius: f64 },

    /// Hit-count grids are capped to keep cell buffers bounded.
    #[error("grid needs {cells} cells, cap is {cap}")]
    GridTooFine { cells: u128, cap: u128 },

    /// Volume sums and dimension targets need a positive finite exponent.
    #[error("exponent {sigma} must be positive and finite")]
    BadExponent { sigma: f64 },

    /// Partial sums need at least one term.
    #[error("summation horizon must be at least 1")]
    ZeroHorizon,

    /// Scale parameters (clamp scale, grid step) must be positive and finite.
    #[error("scale {s} must be positive and finite")]
    NonPositiveScale { s: f64 },

    /// Slope fits need enough scales to be meaningful.
    #[error("need at least {need} box-count scales, got {got}")]
    TooFewScales { got: usize, need: usize },

    /// Box-count scales must decrease strictly.
    #[error("box-count scale at index {index} does not decrease")]
    ScalesNotDecreasing { index: usize },

    /// Box counts cannot shrink as the grid refines.
    #[error("box count at index {index} decreases under refinement")]
    CountsDecreasing { index: usize },

    /// Box counts must be at least 1 to sit on a log-log plot.
    #[error("box count at index {index} is zero")]
    EmptyBoxCount { index: usize },

    /// Monte Carlo unions are implemented for dimensions 1 through 3.
    #[error("dimension {d} is unsupported; expected 1 to 3")]
    DimensionUnsupported { d: usize },

    #[error(transparent)]
    Ifs(#[from] ifs_engine::IfsError),

    #[error(transparent)]
    Symbolic(#[from] symbolic::SymbolicError),
}

pub type Result<T> = std::result::Result<T, LimsupError>;
