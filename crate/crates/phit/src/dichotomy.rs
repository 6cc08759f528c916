use std::cmp::Ordering;
use std::collections::HashMap;

use contfrac::{best_approx_error, good_levels, CfError};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};

use crate::overlap::{detect_overlap, OverlapVerdict};
use crate::system::PhiTSystem;
use crate::{PhitError, Result};

/// Gap classification of one image level.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelDichotomy {
    pub n: u32,
    /// Minimal image gap at this level, for reporting.
    pub gap: f64,
    /// Exact test `gap >= 1 / (8 * 4^n)`: the level keeps the largest
    /// separation order the pigeonhole bound allows, up to the factor 8.
    pub optimal: bool,
    /// The continued-fraction criteria at scale `1/8` nominate this level.
    pub predicted_good: bool,
    /// Predictions below level 3 sit outside the asymptotic regime.
    pub provisional: bool,
    /// Nominated by the criteria yet not optimal. The supporting lemmas
    /// rule this out, so any occurrence is a defect worth investigating.
    pub discrepancy: bool,
}

/// Level-by-level gap report with the optimality cross-check.
#[derive(Debug, Clone, PartialEq)]
pub struct DichotomyReport {
    pub levels: Vec<LevelDichotomy>,
    /// First coincidence level when `t` is rational and it lies within
    /// the examined range.
    pub overlap_level: Option<u32>,
    /// Some denominator `q` of a convergent satisfies
    /// `q / 4 <= 2^n - 1 < q` for an examined `n`. This forces an optimal
    /// level, so `window_covered` implies `optimal_exists`.
    pub window_covered: bool,
    pub optimal_exists: bool,
    /// Non-provisional levels flagged as discrepancies; expected empty.
    pub discrepancies: Vec<u32>,
}

/// Classifies every level `1..=n_max`: computes the minimal gap, decides
/// optimality by an exact integer sign test, and compares against the
/// continued-fraction level predictions at scale `1/8`.
pub fn dichotomy_report(sys: &PhiTSystem, n_max: u32) -> Result<DichotomyReport> {
    if n_max == 0 {
        return Err(PhitError::ZeroLevel);
    }
    let cf = sys.cf();
    let overlap_level = match detect_overlap(sys, n_max)? {
        OverlapVerdict::Overlap { level, .. } => Some(level),
        _ => None,
    };

    let scale = Ratio::new(BigInt::one(), BigInt::from(8));
    let predictions: HashMap<u32, bool> = match good_levels(cf, &scale, n_max) {
        Ok(list) => list.into_iter().map(|g| (g.n, g.provisional)).collect(),
        // A rational parameter can exhaust its expansion before the level
        // window does; the predictions simply run out there.
        Err(CfError::InsufficientDepth { .. }) if sys.is_rational() => HashMap::new(),
        Err(e) => return Err(e.into()),
    };

    let mut levels = Vec::with_capacity(n_max as usize);
    let mut window_covered = false;
    let mut optimal_exists = false;
    let mut discrepancies = Vec::new();
    for n in 1..=n_max {
        let bound = (BigInt::one() << n) - 1u32;
        let best = best_approx_error(cf, &bound)?;
        let one = Ratio::from_integer(BigInt::one());
        let clamped = if best.error < one { best.error.clone() } else { one };
        let gap = (clamped / Ratio::from_integer(BigInt::one() << n))
            .to_f64()
            .unwrap_or(f64::NAN);
        let threshold = Ratio::new(BigInt::one(), BigInt::from(8) << n);
        let optimal = cf.cmp_abs_linear(&best.p, &best.q, &threshold) != Ordering::Less;
        optimal_exists |= optimal;

        if !window_covered {
            if let Some(next) = first_denominator_past(cf, &bound) {
                window_covered = next <= (&bound) * 4u32;
            }
        }

        let (predicted_good, provisional) = match predictions.get(&n) {
            Some(&provisional) => (true, provisional),
            None => (false, n < 3),
        };
        let discrepancy = predicted_good && !optimal;
        if discrepancy && !provisional {
            discrepancies.push(n);
        }
        levels.push(LevelDichotomy { n, gap, optimal, predicted_good, provisional, discrepancy });
    }

    Ok(DichotomyReport { levels, overlap_level, window_covered, optimal_exists, discrepancies })
}

/// Smallest convergent denominator strictly above `bound`, if the
/// expansion reaches that far.
fn first_denominator_past(cf: &contfrac::ContinuedFraction, bound: &BigInt) -> Option<BigInt> {
    cf.convergent_stream().map(|c| c.q).find(|q| q > bound)
}
