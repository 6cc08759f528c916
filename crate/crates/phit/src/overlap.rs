use std::collections::HashSet;

use contfrac::best_approx_error;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};

use crate::system::PhiTSystem;
use crate::{PhitError, Result};

/// Whether two depth-`n` images of the origin can coincide, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverlapVerdict {
    /// Two distinct coordinate pairs name the same point: at this level
    /// the images `(p, 0)` and `(0, q)` are equal because `p = q t`.
    Overlap { level: u32, p: BigInt, q: BigInt },
    /// `t = p / q` in lowest terms forces a coincidence once both
    /// coordinates fit, which first happens at `eventual_level`; that
    /// level lies beyond the searched range.
    NoneUpTo { n_max: u32, eventual_level: u32 },
    /// Irrational `t`: distinct coordinate pairs always give distinct
    /// values, at every level.
    NoneIrrational,
}

/// Decides whether any two depth-`n` images coincide for some `n <= n_max`.
///
/// For rational `t = a/b` in lowest terms the first coincidence is at the
/// smallest `n` with `max(a, b) <= 2^n - 1`; irrational parameters never
/// produce one.
pub fn detect_overlap(sys: &PhiTSystem, n_max: u32) -> Result<OverlapVerdict> {
    if n_max == 0 {
        return Err(PhitError::ZeroLevel);
    }
    let Some(value) = sys.exact_value() else {
        return Ok(OverlapVerdict::NoneIrrational);
    };
    let a = value.numer().clone();
    let b = value.denom().clone();
    let level = a.bits().max(b.bits()) as u32;
    if level <= n_max {
        Ok(OverlapVerdict::Overlap { level, p: a, q: b })
    } else {
        Ok(OverlapVerdict::NoneUpTo { n_max, eventual_level: level })
    }
}

/// Independent coincidence scan: enumerates every depth-`n` image value
/// exactly and reports the first level with a duplicate. Irrational
/// parameters are returned as `None` without scanning, since distinct
/// pairs cannot collide.
pub fn brute_force_overlap_level(sys: &PhiTSystem, n_max: u32) -> Result<Option<u32>> {
    if n_max == 0 {
        return Err(PhitError::ZeroLevel);
    }
    if n_max > crate::images::ENUMERATION_CAP {
        return Err(PhitError::LevelCap { n: n_max, cap: crate::images::ENUMERATION_CAP });
    }
    let Some(value) = sys.exact_value() else {
        return Ok(None);
    };
    let a = value.numer();
    let b = value.denom();
    for n in 1..=n_max {
        let side = 1u64 << n;
        let mut seen = HashSet::with_capacity((side * side) as usize);
        for p in 0..side {
            for q in 0..side {
                let scaled = BigInt::from(p) * b + BigInt::from(q) * a;
                if !seen.insert(scaled) {
                    return Ok(Some(n));
                }
            }
        }
    }
    Ok(None)
}

/// How a minimal-gap value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapDerivation {
    /// `min(1, e(2^n - 1)) / 2^n` with `e` the best one-sided linear
    /// approximation error of `t` by fractions with bounded denominator.
    CfClosedForm,
    /// Full enumeration and sort of the `4^n` image values.
    BruteEnumeration,
}

/// Minimal distance between depth-`n` images of the origin, including
/// zero when two images coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinGap {
    pub n: u32,
    pub value: Ratio<BigInt>,
    /// True when `value` is the gap exactly; false when it was computed
    /// through a 256-bit rational surrogate for an irrational `t`.
    pub exact: bool,
    pub derivation: GapDerivation,
}

impl MinGap {
    /// Double-precision view of the gap.
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

/// Minimal gap at level `n` via the closed form
/// `min(1, e(2^n - 1)) / 2^n`: the candidate differences between image
/// values are `(dp + dq t) / 2^n` with `|dp|, |dq| <= 2^n - 1`, and the
/// smallest nonzero magnitude is attained either with `dq = 0` (giving
/// `1`) or at a continued-fraction convergent of `t`.
pub fn min_gap_exact(sys: &PhiTSystem, n: u32) -> Result<MinGap> {
    if n == 0 {
        return Err(PhitError::ZeroLevel);
    }
    let bound = (BigInt::one() << n) - 1;
    let best = best_approx_error(sys.cf(), &bound)?;
    let one = Ratio::from_integer(BigInt::one());
    let numerator = if best.error < one { best.error } else { one };
    let value = numerator / Ratio::from_integer(BigInt::one() << n);
    Ok(MinGap { n, value, exact: best.exact, derivation: GapDerivation::CfClosedForm })
}

/// Minimal gap at level `n` by enumerating all `4^n` image values,
/// independent of the closed form. Exact for rational `t`; for
/// irrational `t` the values are compared through a 256-bit rational
/// surrogate, which perturbs the result by far less than `2^-100`.
pub fn min_gap_brute(sys: &PhiTSystem, n: u32) -> Result<MinGap> {
    const BRUTE_CAP: u32 = 8;
    if n == 0 {
        return Err(PhitError::ZeroLevel);
    }
    if n > BRUTE_CAP {
        return Err(PhitError::LevelCap { n, cap: BRUTE_CAP });
    }
    let (t, exact) = match sys.exact_value() {
        Some(value) => (value.clone(), true),
        None => (sys.cf().approx_value(256), false),
    };
    let side = 1u64 << n;
    let denom = t.denom();
    let numer = t.numer();
    let mut scaled = Vec::with_capacity((side * side) as usize);
    for p in 0..side {
        for q in 0..side {
            scaled.push(BigInt::from(p) * denom + BigInt::from(q) * numer);
        }
    }
    scaled.sort_unstable();
    let mut best: Option<BigInt> = None;
    for pair in scaled.windows(2) {
        let diff = &pair[1] - &pair[0];
        if best.as_ref().is_none_or(|b| diff < *b) {
            best = Some(diff);
        }
    }
    let value = Ratio::new(best.expect("at least two images"), denom * (BigInt::one() << n));
    Ok(MinGap { n, value, exact, derivation: GapDerivation::BruteEnumeration })
}
