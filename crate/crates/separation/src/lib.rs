//! Separated-set statistics of finite point clouds: maximal separated
//! subsets, minimal gaps, near-pair counts, per-level separation profiles,
//! and the collapse probe that scans profiles for levels where separation
//! breaks down.
//!
//! Separation is strict: members of a separated subset are pairwise at
//! distance greater than the radius, never equal.

#![forbid(unsafe_code)]

mod gaps;
mod profile;
mod subsets;

pub use gaps::{min_gap, min_gap_nd, near_pair_count, near_pair_count_nd};
pub use profile::{
    cs_probe, separation_profile, CsProbe, CsVerdict, LevelRecord, SeparationProfile,
    DEFAULT_COLLAPSE_THRESHOLD,
};
pub use subsets::{brute_force_max_separated, max_separated, max_separated_nd, SeparatedSubset};

/// Errors from separated-set computations.
#[derive(Debug, thiserror::Error)]
pub enum SeparationError {
    /// Separation radii must be positive and finite.
    #[error("separation radius {r} must be positive and finite")]
    BadRadius { r: f64 },

    /// Minimal gaps need at least two points.
    #[error("need at least 2 points, got {got}")]
    TooFewPoints { got: usize },

    /// Probes need at least one level record.
    #[error("separation profile is empty")]
    EmptyProfile,

    /// Probe scales must be positive and finite.
    #[error("probe scale {s} must be positive and finite")]
    BadScale { s: f64 },

    /// Points fed to one computation must share a dimension.
    #[error("point {index} has dimension {got}, expected {expected}")]
    MixedDimensions {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error(transparent)]
    Ifs(#[from] ifs_engine::IfsError),
}

pub type Result<T> = std::result::Result<T, SeparationError>;
