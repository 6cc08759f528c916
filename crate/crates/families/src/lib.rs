//! Parametrised families of self-similar sets on the line.
//!
//! A family fixes a digit set `D` and lets the contraction ratio range over
//! an interval. The crate bundles the tools used to compare members of one
//! family against each other: difference-ratio bounds on the separation
//! exponent, similarity dimension for prescribed ratio lists, exact
//! small-depth separation scans at algebraic parameters, and a sweep that
//! measures how the separated fraction of an image cloud changes with the
//! contraction ratio.

#![forbid(unsafe_code)]

mod dimension;
mod garsia;
mod spec;
mod sweep;

pub use dimension::{eight_map_cover_constants, similarity_dimension, CoverConstants};
pub use garsia::{garsia_separation_scan, GarsiaRecord, GarsiaScan, ScanLambda, SCAN_DEPTH_CAP};
pub use spec::{
    alpha_bound_for_digits, alpha_bound_for_ratio, alpha_lower_bound, difference_ratio,
    AlphaBound, AlphaRule, FamilyKind, FamilySpec,
};
pub use sweep::{lambda_sweep, SweepConfig, SweepResult};

use thiserror::Error;

/// Errors produced while validating or evaluating a family.
#[derive(Debug, Error)]
pub enum FamiliesError {
    #[error("a digit set needs at least two entries, got {got}")]
    TooFewDigits { got: usize },
    #[error("digit {d} appears more than once")]
    DuplicateDigit { d: f64 },
    #[error("digit {d} is not finite")]
    NonFiniteDigit { d: f64 },
    #[error("a ratio list needs at least one entry")]
    EmptyRatios,
    #[error("ratio {r} lies outside (0, 1)")]
    BadRatio { r: f64 },
    #[error("scan depth {n_max} exceeds the cap {cap}")]
    ScanDepthCap { n_max: u32, cap: u32 },
    #[error("scan parameter {lambda} lies outside (1/2, 1)")]
    BadScanLambda { lambda: f64 },
    #[error("the anchor word is empty")]
    EmptyAnchorWord,
    #[error("level zero has no image cloud")]
    ZeroLevel,
    #[error("scale {s} must be positive and finite")]
    BadScale { s: f64 },
    #[error("grid [{lo}, {hi}] with {steps} steps is not a valid sweep grid")]
    BadGrid { lo: f64, hi: f64, steps: usize },
    #[error("margin {margin} must be nonnegative and finite")]
    BadMargin { margin: f64 },
    #[error("the threshold grid is empty or contains a non-finite entry")]
    BadThresholdGrid,
    #[error("grid [{lo}, {hi}] leaves the admissible window ({window_lo}, {window_hi})")]
    GridOutsideWindow {
        lo: f64,
        hi: f64,
        window_lo: f64,
        window_hi: f64,
    },
    #[error("measure has {alphabet} symbols but the family has {digits} digits")]
    AlphabetMismatch { digits: usize, alphabet: usize },
    #[error(transparent)]
    Ifs(#[from] ifs_engine::IfsError),
    #[error(transparent)]
    Separation(#[from] separation::SeparationError),
    #[error(transparent)]
    Symbolic(#[from] symbolic::SymbolicError),
}

pub type Result<T> = std::result::Result<T, FamiliesError>;
