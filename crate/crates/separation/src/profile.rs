use ifs_engine::{point_cloud, Similarity1D};
use rayon::prelude::*;
use symbolic::SymbolicMeasure;

use crate::{max_separated, min_gap, near_pair_count, Result, SeparationError};

/// Ratio threshold below which a level witnesses separation collapse.
pub const DEFAULT_COLLAPSE_THRESHOLD: f64 = 0.05;

/// Separation statistics of one level-n cloud.
#[derive(Clone, Debug)]
pub struct LevelRecord {
    pub n: u32,
    /// Cloud cardinality `R_n`.
    pub cardinality: usize,
    /// Maximum separated-subset size `T_n` at the probe radius.
    pub separated: usize,
    /// `T_n / R_n`, in `(0, 1]`.
    pub ratio: f64,
    /// Minimum pairwise gap; infinite for single-point clouds.
    pub min_gap: f64,
    /// Ordered pairs within the probe radius.
    pub near_pairs: usize,
    /// The probe radius `s * R_n^{-1/d}` used for `separated` and
    /// `near_pairs`.
    pub radius: f64,
}

/// Per-level separation records for a fixed probe scale.
#[derive(Clone, Debug)]
pub struct SeparationProfile {
    pub s: f64,
    pub records: Vec<LevelRecord>,
}

impl SeparationProfile {
    /// Wraps externally computed records (exact-arithmetic pipelines build
    /// their own) after sorting by level.
    #[must_use]
    pub fn from_records(s: f64, mut records: Vec<LevelRecord>) -> Self {
        records.sort_by_key(|r| r.n);
        SeparationProfile { s, records }
    }
}

/// Separation profile of a 1D similarity IFS over a level range: per level,
/// the cloud statistics at probe radius `s / R_n` (the 1D case of
/// `s * R_n^{-1/d}`).
///
/// Levels are computed in parallel and reassembled in order.
///
/// # Errors
///
/// Rejects non-positive probe scales and empty ranges, and propagates
/// cloud construction errors.
pub fn separation_profile(
    ifs: &Similarity1D,
    measure: &SymbolicMeasure,
    z: f64,
    s: f64,
    levels: std::ops::RangeInclusive<u32>,
) -> Result<SeparationProfile> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(SeparationError::BadScale { s });
    }
    if levels.is_empty() {
        return Err(SeparationError::EmptyProfile);
    }
    let ns: Vec<u32> = levels.collect();
    let records: Vec<Result<LevelRecord>> = ns
        .par_iter()
        .map(|&n| level_record(ifs, measure, z, s, n))
        .collect();
    let mut out = Vec::with_capacity(records.len());
    for r in records {
        out.push(r?);
    }
    Ok(SeparationProfile { s, records: out })
}

fn level_record(
    ifs: &Similarity1D,
    measure: &SymbolicMeasure,
    z: f64,
    s: f64,
    n: u32,
) -> Result<LevelRecord> {
    let cloud = point_cloud(ifs, measure, n, z)?;
    let cardinality = cloud.cardinality();
    let radius = s / cardinality as f64;
    let subset = max_separated(&cloud.points, radius)?;
    let separated = subset.count();
    let gap = if cardinality >= 2 {
        min_gap(&cloud.points)?
    } else {
        f64::INFINITY
    };
    Ok(LevelRecord {
        n,
        cardinality,
        separated,
        ratio: separated as f64 / cardinality as f64,
        min_gap: gap,
        near_pairs: near_pair_count(&cloud.points, radius),
        radius,
    })
}

/// Probe verdict over a profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsVerdict {
    /// No level dropped below the collapse threshold.
    CsConsistent,
    /// At least one level dropped below the threshold.
    CollapseWitnessed,
}

impl std::fmt::Display for CsVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CsVerdict::CsConsistent => write!(f, "CS-consistent"),
            CsVerdict::CollapseWitnessed => write!(f, "collapse-witnessed"),
        }
    }
}

/// Result of scanning a profile for separation collapse.
#[derive(Clone, Debug)]
pub struct CsProbe {
    pub min_ratio: f64,
    pub verdict: CsVerdict,
    /// Levels whose ratio fell below the threshold, ascending.
    pub witness_levels: Vec<u32>,
}

/// Scans a profile for levels whose separated fraction drops below
/// `threshold`. Finding one witnesses collapse along the probed levels;
/// finding none is consistent with uniform separation, not a proof.
///
/// # Errors
///
/// Rejects empty profiles.
pub fn cs_probe(profile: &SeparationProfile, threshold: f64) -> Result<CsProbe> {
    if profile.records.is_empty() {
        return Err(SeparationError::EmptyProfile);
    }
    let min_ratio = profile
        .records
        .iter()
        .map(|r| r.ratio)
        .fold(f64::INFINITY, f64::min);
    let witness_levels: Vec<u32> = profile
        .records
        .iter()
        .filter(|r| r.ratio < threshold)
        .map(|r| r.n)
        .collect();
    let verdict = if witness_levels.is_empty() {
        CsVerdict::CsConsistent
    } else {
        CsVerdict::CollapseWitnessed
    };
    Ok(CsProbe {
        min_ratio,
        verdict,
        witness_levels,
    })
}
