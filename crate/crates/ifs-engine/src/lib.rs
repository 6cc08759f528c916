//! Iterated function systems: composed maps, level-n image clouds,
//! attractor bounds, empirical pushforward measures, and deterministic
//! random perturbations.
//!
//! One-dimensional similarity systems `phi_i(x) = lambda x + d_i` are the
//! workhorse. Affine systems in dimension up to 3 carry matrix parts
//! checked contractive through their largest singular value.

#![forbid(unsafe_code)]

mod affine;
mod cloud;
mod perturb;
mod similarity;

pub use affine::{AffineIfs, AffineMapNd, StructuralTag};
pub use cloud::{empirical_pushforward, point_cloud, point_cloud_nd, PointCloud1D, PointCloudNd};
pub use perturb::{perturbed_point, perturbed_point_nd, truncation_bound, PerturbationScheme};
pub use similarity::{Affine1D, Similarity1D};

/// Errors from IFS construction and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum IfsError {
    /// Contraction ratios must lie strictly between 0 and 1.
    #[error("contraction ratio {lambda} outside (0, 1)")]
    InvalidContraction { lambda: f64 },

    /// Digit sets must be non-empty, finite, and pairwise distinct.
    #[error("digit set must contain at least one digit")]
    EmptyDigits,

    #[error("digits {a} and {b} coincide")]
    DuplicateDigits { a: f64, b: f64 },

    #[error("digit {digit} is not finite")]
    NonFiniteDigit { digit: f64 },

    /// Word symbols must index into the digit set.
    #[error("word symbol {symbol} exceeds alphabet size {alphabet}")]
    SymbolOutOfRange { symbol: u8, alphabet: usize },

    /// Affine parts must be strict contractions.
    #[error("map {index} has operator norm {norm} >= 1")]
    NotContractive { index: usize, norm: f64 },

    /// Affine systems support dimensions 1 through 3.
    #[error("dimension {dim} outside supported range 1..=3")]
    BadDimension { dim: usize },

    #[error("expected dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Perturbed evaluation truncates at `depth >= |a|` symbols.
    #[error("truncation depth {depth} is below the word length {word_len}")]
    DepthBelowWord { depth: usize, word_len: usize },

    /// Extending past the base word requires a non-empty tail.
    #[error("tail word must be non-empty when depth exceeds the base word")]
    EmptyTail,

    /// Perturbation radii must be non-negative and finite.
    #[error("perturbation radius {rho} invalid")]
    BadRadius { rho: f64 },

    /// An IFS needs at least one map.
    #[error("an IFS needs at least one map")]
    NoMaps,

    /// Histograms need at least one bin.
    #[error("histogram bin count must be >= 1")]
    ZeroBins,

    #[error(transparent)]
    Symbolic(#[from] symbolic::SymbolicError),
}

pub type Result<T> = std::result::Result<T, IfsError>;
