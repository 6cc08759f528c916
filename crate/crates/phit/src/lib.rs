//! Exact analysis of the four-map family on the line whose maps halve and
//! translate by one of `0`, `1/2`, `t/2`, `(1+t)/2` for a parameter
//! `t` in `(0, 1]`.
//!
//! Every depth-`n` image of the origin is a point `(p + q t) / 2^n` with
//! integer coordinates `0 <= p, q <= 2^n - 1`, so coincidence and gap
//! questions reduce to rational arithmetic against the continued fraction
//! of `t`. This crate keeps that reduction exact: overlap detection,
//! minimal image gaps, per-level optimality flags, and separated-subset
//! counts are all decided by integer sign tests, with floating point used
//! only for reporting.

#![forbid(unsafe_code)]

mod collapse;
mod dichotomy;
mod images;
mod overlap;
mod records;
mod system;

pub use collapse::{collapse_levels, witness_h, CollapseLevel, ConvergentSide};
pub use dichotomy::{dichotomy_report, DichotomyReport, LevelDichotomy};
pub use images::{images_exact, pair_to_word, word_to_pair, ExactPoint, ENUMERATION_CAP};
pub use overlap::{
    brute_force_overlap_level, detect_overlap, min_gap_brute, min_gap_exact, GapDerivation,
    MinGap, OverlapVerdict,
};
pub use records::separation_records;
pub use system::PhiTSystem;

use num_bigint::BigInt;

/// Errors produced by this crate.
#[derive(Debug, thiserror::Error)]
pub enum PhitError {
    /// Level 0 has a single image and no gap statistics.
    #[error("level must be at least 1")]
    ZeroLevel,
    /// Full enumeration of `4^n` pairs is capped to keep memory bounded.
    #[error("level {n} exceeds the enumeration cap {cap}")]
    LevelCap { n: u32, cap: u32 },
    /// The requested level range is empty.
    #[error("requested level range is empty")]
    EmptyLevelRange,
    /// No partial quotient of `t` is large enough to build the `k`-th
    /// collapse level.
    #[error("no partial quotient reaches {needed} (k = {k}); largest seen is {max_seen}")]
    NoCollapseQuotient { k: u32, needed: BigInt, max_seen: BigInt },
    /// A rate-function witness needs at least one level.
    #[error("witness rate function needs a non-empty level list")]
    EmptyLevels,
    /// Witness levels must be strictly increasing.
    #[error("witness levels must be strictly increasing and at least 1")]
    LevelsNotIncreasing,
    /// Scales used for separated-subset radii must lie in `(0, 1)`.
    #[error("scale {s} is outside (0, 1)")]
    BadScale { s: String },
    #[error(transparent)]
    Cf(#[from] contfrac::CfError),
    #[error(transparent)]
    Ifs(#[from] ifs_engine::IfsError),
    #[error(transparent)]
    Symbolic(#[from] symbolic::SymbolicError),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, PhitError>;
