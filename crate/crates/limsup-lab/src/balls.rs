use ifs_engine::PointCloud1D;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use symbolic::{RateFunction, SymbolicMeasure};

use crate::intervals::{merge_intervals, union_length};
use crate::{LimsupError, Result};

/// Ball radii of one level family: a single shared radius when the driving
/// measure is uniform, one radius per center otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum Radii {
    Common(f64),
    PerBall(Vec<f64>),
}

/// The level-n target family: one ball per image point, radius given by the
/// cylinder mass times the rate value at n, optionally clamped.
#[derive(Clone, Debug)]
pub struct BallFamily {
    pub level: u32,
    pub centers: Vec<f64>,
    pub radii: Radii,
    /// Set when the clamp cap `s / (3 R_n)` was requested at construction.
    pub clamped: bool,
}

impl BallFamily {
    #[must_use]
    pub fn count(&self) -> usize {
        self.centers.len()
    }

    /// Radius of ball `i`.
    #[must_use]
    pub fn radius(&self, i: usize) -> f64 {
        match &self.radii {
            Radii::Common(r) => *r,
            Radii::PerBall(rs) => rs[i],
        }
    }

    /// Largest radius in the family, 0 when the family is empty.
    #[must_use]
    pub fn max_radius(&self) -> f64 {
        match &self.radii {
            Radii::Common(r) if !self.centers.is_empty() => r.max(0.0),
            Radii::Common(_) => 0.0,
            Radii::PerBall(rs) => rs.iter().copied().fold(0.0, f64::max),
        }
    }

    /// Smallest strictly positive radius, or None when every ball is
    /// degenerate.
    #[must_use]
    pub fn min_positive_radius(&self) -> Option<f64> {
        match &self.radii {
            Radii::Common(r) if !self.centers.is_empty() && *r > 0.0 => Some(*r),
            Radii::Common(_) => None,
            Radii::PerBall(rs) => rs
                .iter()
                .copied()
                .filter(|r| *r > 0.0)
                .min_by(f64::total_cmp),
        }
    }

    /// The family as a merged interval list. Balls with non-positive radius
    /// contribute nothing.
    #[must_use]
    pub fn intervals(&self) -> Vec<(f64, f64)> {
        let raw: Vec<(f64, f64)> = self
            .centers
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| {
                let r = self.radius(i);
                if r > 0.0 {
                    Some((c - r, c + r))
                } else {
                    None
                }
            })
            .collect();
        merge_intervals(&raw)
    }
}

/// Builds the level family over a point cloud: ball i has radius
/// `m([a_i]) * h(n)`, capped at `s / (3 R_n)` when `clamp = Some(s)`, where
/// `R_n` is the cloud cardinality. Uniform measures share one radius.
///
/// # Errors
///
/// [`LimsupError::NonPositiveScale`] when the clamp scale is not positive
/// and finite; rate evaluation errors pass through.
pub fn level_balls(
    cloud: &PointCloud1D,
    measure: &SymbolicMeasure,
    h: &RateFunction,
    clamp: Option<f64>,
) -> Result<BallFamily> {
    let n = cloud.level;
    let hn = h.eval(n)?;
    let cap = match clamp {
        Some(s) if s.is_finite() && s > 0.0 => s / (3.0 * cloud.cardinality() as f64),
        Some(s) => return Err(LimsupError::NonPositiveScale { s }),
        None => f64::INFINITY,
    };
    let radii = if measure.is_uniform() {
        let mass = measure.probabilities()[0].powi(n as i32);
        Radii::Common((mass * hn).min(cap))
    } else {
        Radii::PerBall(
            cloud
                .words
                .iter()
                .map(|w| (measure.cylinder_mass(w) * hn).min(cap))
                .collect(),
        )
    };
    Ok(BallFamily {
        level: n,
        centers: cloud.points.clone(),
        radii,
        clamped: clamp.is_some(),
    })
}

/// Lebesgue measure of the union of one family.
#[must_use]
pub fn union_measure(family: &BallFamily) -> f64 {
    union_length(&family.intervals())
}

/// Lebesgue measure of the union over several families.
#[must_use]
pub fn union_measure_many(families: &[BallFamily]) -> f64 {
    let mut raw: Vec<(f64, f64)> = Vec::new();
    for f in families {
        raw.extend(f.intervals());
    }
    union_length(&merge_intervals(&raw))
}

/// Monte Carlo volume of a union of equal-radius Euclidean balls in
/// dimension 1 to 3, with a fixed seed. Returns the estimate and its
/// standard error (both 0 for an empty family).
///
/// # Errors
///
/// [`LimsupError::DimensionUnsupported`] outside dimensions 1..=3,
/// [`LimsupError::NonPositiveScale`] for a bad radius, and
/// [`LimsupError::ZeroHorizon`] when no samples are requested.
pub fn union_measure_nd(
    centers: &[Vec<f64>],
    radius: f64,
    samples: u32,
    seed: u64,
) -> Result<(f64, f64)> {
    let Some(first) = centers.first() else {
        return Ok((0.0, 0.0));
    };
    let d = first.len();
    if !(1..=3).contains(&d) || centers.iter().any(|c| c.len() != d) {
        return Err(LimsupError::DimensionUnsupported { d });
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(LimsupError::NonPositiveScale { s: radius });
    }
    if samples == 0 {
        return Err(LimsupError::ZeroHorizon);
    }
    let mut lo = vec![f64::INFINITY; d];
    let mut hi = vec![f64::NEG_INFINITY; d];
    for c in centers {
        for (axis, &x) in c.iter().enumerate() {
            lo[axis] = lo[axis].min(x - radius);
            hi[axis] = hi[axis].max(x + radius);
        }
    }
    let volume: f64 = lo.iter().zip(&hi).map(|(a, b)| b - a).product();
    let r2 = radius * radius;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut hits: u64 = 0;
    let mut point = vec![0.0; d];
    for _ in 0..samples {
        for axis in 0..d {
            point[axis] = rng.gen_range(lo[axis]..hi[axis]);
        }
        let inside = centers.iter().any(|c| {
            let dist2: f64 = c
                .iter()
                .zip(&point)
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            dist2 <= r2
        });
        if inside {
            hits += 1;
        }
    }
    let p = hits as f64 / f64::from(samples);
    let std_err = volume * (p * (1.0 - p) / f64::from(samples)).sqrt();
    Ok((volume * p, std_err))
}
