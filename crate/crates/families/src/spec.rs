//! Family descriptions: digit sets, parameter windows, and the
//! difference-ratio table bounding the separation exponent from below.

use crate::{FamiliesError, Result};
use ifs_engine::Similarity1D;

/// Lower bound on the separation exponent when the difference ratio is 1.
const UNIT_RATIO_BOUND: f64 = 0.668;
/// Lower bound on the separation exponent when the difference ratio is 2.
const RATIO_TWO_BOUND: f64 = 0.5;
/// Lower bound on the separation exponent for the digit set {0, 1, 3}.
const ZERO_ONE_THREE_BOUND: f64 = 0.418;
/// Above this ratio the reciprocal bound 1/(b+1) is sharp.
const LARGE_RATIO_THRESHOLD: f64 = 5.82842712474619;
/// Slack used when matching a difference ratio against a table entry.
const RATIO_EQ_TOL: f64 = 1e-9;

/// Named digit-set families studied by the sweep and scan tools.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Two maps with digits -1 and 1.
    BernoulliConvolution,
    /// Three maps with digits 0, 1, and 3.
    ZeroOneThree,
    /// Caller-supplied digit set.
    Custom,
}

/// A one-parameter family of similarity systems sharing a digit set.
///
/// Every member uses the same translations and a common contraction ratio
/// drawn from `lambda_range`. The range records the window in which the
/// family is interesting; `ifs` itself accepts any ratio in (0, 1).
#[derive(Debug, Clone)]
pub struct FamilySpec {
    kind: FamilyKind,
    digits: Vec<f64>,
    lambda_range: (f64, f64),
    difference_ratio: f64,
}

impl FamilySpec {
    /// Signed-digit family with translations -1 and 1.
    pub fn bernoulli_convolution() -> Self {
        FamilySpec {
            kind: FamilyKind::BernoulliConvolution,
            digits: vec![-1.0, 1.0],
            lambda_range: (0.5, UNIT_RATIO_BOUND),
            difference_ratio: 1.0,
        }
    }

    /// Three-map family with translations 0, 1, and 3.
    pub fn zero_one_three() -> Self {
        FamilySpec {
            kind: FamilyKind::ZeroOneThree,
            digits: vec![0.0, 1.0, 3.0],
            lambda_range: (1.0 / 3.0, ZERO_ONE_THREE_BOUND),
            difference_ratio: 3.0,
        }
    }

    /// Family over a caller-supplied digit set and parameter window.
    pub fn custom(digits: Vec<f64>, lambda_range: (f64, f64)) -> Result<Self> {
        let ratio = difference_ratio(&digits)?;
        let (lo, hi) = lambda_range;
        if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || hi >= 1.0 || lo >= hi {
            return Err(FamiliesError::BadGrid { lo, hi, steps: 0 });
        }
        Ok(FamilySpec {
            kind: FamilyKind::Custom,
            digits,
            lambda_range,
            difference_ratio: ratio,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn digits(&self) -> &[f64] {
        &self.digits
    }

    /// Parameter window in which the family is studied.
    pub fn lambda_range(&self) -> (f64, f64) {
        self.lambda_range
    }

    /// Largest digit difference divided by the smallest nonzero one.
    pub fn difference_ratio(&self) -> f64 {
        self.difference_ratio
    }

    /// Member of the family at contraction ratio `lambda`.
    pub fn ifs(&self, lambda: f64) -> Result<Similarity1D> {
        Ok(Similarity1D::new(lambda, self.digits.clone())?)
    }
}

/// Largest absolute digit difference divided by the smallest nonzero
/// absolute difference. Always at least 1 for a valid digit set.
pub fn difference_ratio(digits: &[f64]) -> Result<f64> {
    if digits.len() < 2 {
        return Err(FamiliesError::TooFewDigits { got: digits.len() });
    }
    for &d in digits {
        if !d.is_finite() {
            return Err(FamiliesError::NonFiniteDigit { d });
        }
    }
    let mut max_diff = 0.0f64;
    let mut min_diff = f64::INFINITY;
    for (i, &a) in digits.iter().enumerate() {
        for &b in &digits[i + 1..] {
            let diff = (a - b).abs();
            if diff == 0.0 {
                return Err(FamiliesError::DuplicateDigit { d: a });
            }
            max_diff = max_diff.max(diff);
            min_diff = min_diff.min(diff);
        }
    }
    Ok(max_diff / min_diff)
}

/// Which entry of the bound table produced an `AlphaBound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaRule {
    /// Dedicated entry for the digit set {0, 1, 3}.
    ZeroOneThreeEntry,
    /// Table entry for difference ratio 1.
    UnitRatio,
    /// Table entry for difference ratio 2.
    RatioTwo,
    /// Closed form 1/(b+1), sharp once b is at least 3 + sqrt(8).
    LargeRatioClosedForm,
    /// Fallback reciprocal bound 1/(b+1).
    GenericReciprocal,
}

impl std::fmt::Display for AlphaRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            AlphaRule::ZeroOneThreeEntry => "{0,1,3} table entry",
            AlphaRule::UnitRatio => "ratio-1 table entry",
            AlphaRule::RatioTwo => "ratio-2 table entry",
            AlphaRule::LargeRatioClosedForm => "1/(b+1), sharp for b >= 3+sqrt(8)",
            AlphaRule::GenericReciprocal => "generic 1/(b+1) bound",
        };
        f.write_str(text)
    }
}

/// Lower bound on the separation exponent together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaBound {
    pub value: f64,
    pub rule: AlphaRule,
}

/// Bound-table lookup keyed by the difference ratio alone.
pub fn alpha_bound_for_ratio(b: f64) -> AlphaBound {
    if (b - 1.0).abs() <= RATIO_EQ_TOL {
        AlphaBound {
            value: UNIT_RATIO_BOUND,
            rule: AlphaRule::UnitRatio,
        }
    } else if (b - 2.0).abs() <= RATIO_EQ_TOL {
        AlphaBound {
            value: RATIO_TWO_BOUND,
            rule: AlphaRule::RatioTwo,
        }
    } else if b >= LARGE_RATIO_THRESHOLD - RATIO_EQ_TOL {
        AlphaBound {
            value: 1.0 / (b + 1.0),
            rule: AlphaRule::LargeRatioClosedForm,
        }
    } else {
        AlphaBound {
            value: 1.0 / (b + 1.0),
            rule: AlphaRule::GenericReciprocal,
        }
    }
}

/// Lower bound on the separation exponent of a digit set.
///
/// The digit set {0, 1, 3} has its own table entry; every other set is
/// keyed by its difference ratio.
pub fn alpha_bound_for_digits(digits: &[f64]) -> Result<AlphaBound> {
    let ratio = difference_ratio(digits)?;
    let mut sorted = digits.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted == [0.0, 1.0, 3.0] {
        return Ok(AlphaBound {
            value: ZERO_ONE_THREE_BOUND,
            rule: AlphaRule::ZeroOneThreeEntry,
        });
    }
    Ok(alpha_bound_for_ratio(ratio))
}

/// Lower bound on the separation exponent of `family`.
pub fn alpha_lower_bound(family: &FamilySpec) -> AlphaBound {
    alpha_bound_for_digits(family.digits())
        .expect("family digit sets are validated at construction")
}
