use std::cmp::Ordering;

use contfrac::TSpec;
use num_bigint::BigInt;
use symbolic::RateFunction;

use crate::system::PhiTSystem;
use crate::{PhitError, Result};

/// Side from which the convergent `p_m / q_m` approaches `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergentSide {
    /// `p_m / q_m < t`, so `q_m t - p_m > 0`.
    Below,
    /// `p_m / q_m > t`, so `q_m t - p_m < 0`.
    Above,
}

impl std::fmt::Display for ConvergentSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConvergentSide::Below => write!(f, "below"),
            ConvergentSide::Above => write!(f, "above"),
        }
    }
}

/// One collapse level: a window where a huge partial quotient drives the
/// separated-subset fraction down by a factor of order `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseLevel {
    pub k: u32,
    /// Smallest index `m >= 1` with partial quotient `zeta_{m+1} >= k^3`.
    pub m_k: usize,
    /// Level with `2^{n_k} <= k^2 q_{m_k} < 2^{n_k + 1}`.
    pub n_k: u32,
    /// Denominator of the anchoring convergent.
    pub q_mk: BigInt,
    /// Which side the anchoring convergent approaches from; both occur,
    /// and the collapse construction is insensitive to it.
    pub side: ConvergentSide,
}

/// Builds the first `k_max` collapse levels, failing with the offending
/// `k` when no partial quotient is large enough.
///
/// The `k`-th level needs `zeta_{m+1} >= k^3`. Periodic expansions have a
/// finite quotient set, so one full cycle decides existence; rational and
/// table expansions are scanned to their end.
pub fn collapse_levels(sys: &PhiTSystem, k_max: u32) -> Result<Vec<CollapseLevel>> {
    if k_max == 0 {
        return Err(PhitError::ZeroLevel);
    }
    let cf = sys.cf();
    let scan_limit = match sys.spec() {
        TSpec::Periodic { preperiod, period } => preperiod.len() + 2 * period.len() + 1,
        _ => cf.depth(),
    };

    let mut levels = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let needed = u128::from(k).pow(3);
        let mut found = None;
        let mut max_seen: u64 = 0;
        for position in 2..=scan_limit {
            let Some(quotient) = cf.quotient(position) else {
                break;
            };
            max_seen = max_seen.max(quotient);
            if u128::from(quotient) >= needed {
                found = Some(position - 1);
                break;
            }
        }
        let Some(m_k) = found else {
            return Err(PhitError::NoCollapseQuotient {
                k,
                needed: BigInt::from(needed),
                max_seen: BigInt::from(max_seen),
            });
        };
        let (p, q) = convergent_at(sys, m_k);
        let side = match cf.sign_linear(&-&p, &q) {
            Ordering::Greater => ConvergentSide::Below,
            Ordering::Less => ConvergentSide::Above,
            // The anchoring index is never the final convergent of a
            // rational expansion, so `q t - p` cannot vanish.
            Ordering::Equal => unreachable!("anchor precedes the expansion end"),
        };
        let scaled = BigInt::from(k) * BigInt::from(k) * &q;
        let n_k = (scaled.bits() - 1) as u32;
        levels.push(CollapseLevel { k, m_k, n_k, q_mk: q, side });
    }
    Ok(levels)
}

/// Walks the convergent stream to index `m`, independent of the cached
/// expansion depth.
fn convergent_at(sys: &PhiTSystem, m: usize) -> (BigInt, BigInt) {
    sys.cf()
        .convergent_stream()
        .find(|c| c.m == m)
        .map(|c| (c.p, c.q))
        .expect("anchor index lies within the expansion")
}

/// Indicator rate function supported on the given levels with value `s`,
/// the mass a scale-`s` ball family assigns to each chosen level of a
/// one-dimensional system.
pub fn witness_h(levels: &[u32], s: f64) -> Result<RateFunction> {
    if levels.is_empty() {
        return Err(PhitError::EmptyLevels);
    }
    if levels[0] == 0 || levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PhitError::LevelsNotIncreasing);
    }
    if !(s > 0.0 && s < 1.0) {
        return Err(PhitError::BadScale { s: s.to_string() });
    }
    Ok(RateFunction::IndicatorOnLevels { levels: levels.to_vec(), value: s })
}
