//! Similarity dimension for lists of contraction ratios.

use crate::{FamiliesError, Result};

/// Bisection stops once the bracket is this narrow.
const BISECT_TOL: f64 = 1e-12;

/// Solution `s` of `sum r_i^s = 1` for contraction ratios `r_i` in (0, 1).
///
/// Equal ratios use the closed form `log l / (-log r)`. Mixed ratios fall
/// back to bisection: the left end starts at 0 where the sum is the number
/// of ratios, and the right end doubles until the sum drops below 1.
pub fn similarity_dimension(ratios: &[f64]) -> Result<f64> {
    if ratios.is_empty() {
        return Err(FamiliesError::EmptyRatios);
    }
    for &r in ratios {
        if !r.is_finite() || r <= 0.0 || r >= 1.0 {
            return Err(FamiliesError::BadRatio { r });
        }
    }
    let first = ratios[0];
    if ratios.iter().all(|&r| r == first) {
        return Ok((ratios.len() as f64).ln() / -first.ln());
    }
    let excess = |s: f64| ratios.iter().map(|r| r.powf(s)).sum::<f64>() - 1.0;
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    while excess(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > BISECT_TOL {
        let mid = 0.5 * (lo + hi);
        if excess(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Constants tied to the eight-map planar family with a common ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverConstants {
    /// Common contraction ratio, the root of `8 gamma^E = 1`.
    pub gamma: f64,
    /// Similarity dimension `E = 1 + log 2 / log 3` shared by the family.
    pub attractor_dimension: f64,
    /// Solution `x` of `2 gamma^(x - 1) = 1`.
    pub cover_exponent: f64,
}

/// Closed forms for the eight-map family whose similarity dimension equals
/// `1 + log 2 / log 3`.
pub fn eight_map_cover_constants() -> CoverConstants {
    let attractor_dimension = 1.0 + 2.0f64.ln() / 3.0f64.ln();
    let gamma = (-(8.0f64.ln()) / attractor_dimension).exp();
    let cover_exponent = 1.0 - 2.0f64.ln() / gamma.ln();
    CoverConstants {
        gamma,
        attractor_dimension,
        cover_exponent,
    }
}
