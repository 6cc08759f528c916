use nalgebra::DVector;
use symbolic::{stopping_generation, SymbolicMeasure, Word};

use crate::{AffineIfs, Result, Similarity1D};

/// A level-n image cloud `{phi_a(z)}` over the stopping generation of a
/// measure, in lexicographic word order.
#[derive(Clone, Debug)]
pub struct PointCloud1D {
    pub level: u32,
    pub anchor: f64,
    /// Set when the anchor lies outside the attractor bounds. The cloud is
    /// still well defined; callers decide whether to warn.
    pub anchor_outside: bool,
    pub words: Vec<Word>,
    pub points: Vec<f64>,
}

impl PointCloud1D {
    #[must_use]
    pub fn cardinality(&self) -> usize {
        self.points.len()
    }
}

/// As [`PointCloud1D`] for affine systems in dimension up to 3.
#[derive(Clone, Debug)]
pub struct PointCloudNd {
    pub level: u32,
    pub anchor: DVector<f64>,
    pub anchor_outside: bool,
    pub words: Vec<Word>,
    pub points: Vec<DVector<f64>>,
}

impl PointCloudNd {
    #[must_use]
    pub fn cardinality(&self) -> usize {
        self.points.len()
    }
}

/// Builds the level-n cloud of `ifs` at anchor `z`: one point `phi_a(z)`
/// per stopping-generation word, in the generation's lexicographic order.
///
/// # Errors
///
/// Propagates stopping-generation errors (zero index, generation cap) and
/// word-symbol mismatches.
pub fn point_cloud(
    ifs: &Similarity1D,
    measure: &SymbolicMeasure,
    n: u32,
    z: f64,
) -> Result<PointCloud1D> {
    let generation = stopping_generation(measure, n)?;
    let words = generation.into_words();
    let mut points = Vec::with_capacity(words.len());
    for word in &words {
        points.push(ifs.compose_map(word)?.apply(z));
    }
    let (lo, hi) = ifs.attractor_bounds();
    Ok(PointCloud1D {
        level: n,
        anchor: z,
        anchor_outside: z < lo || z > hi,
        words,
        points,
    })
}

/// Builds the level-n cloud of an affine system at anchor `z`.
///
/// # Errors
///
/// As [`point_cloud`], plus dimension mismatches between `z` and the IFS.
pub fn point_cloud_nd(
    ifs: &AffineIfs,
    measure: &SymbolicMeasure,
    n: u32,
    z: &DVector<f64>,
) -> Result<PointCloudNd> {
    if z.len() != ifs.dim() {
        return Err(crate::IfsError::DimensionMismatch {
            expected: ifs.dim(),
            got: z.len(),
        });
    }
    let generation = stopping_generation(measure, n)?;
    let words = generation.into_words();
    let mut points = Vec::with_capacity(words.len());
    for word in &words {
        points.push(ifs.compose_map(word)?.apply(z));
    }
    let radius = ifs.attractor_radius();
    Ok(PointCloudNd {
        level: n,
        anchor: z.clone(),
        anchor_outside: z.norm() > radius,
        words,
        points,
    })
}

/// Per-bin masses of the discrete pushforward `sum m([a]) delta_{phi_a(z)}`
/// over `bins` equal subintervals of the attractor bounds. Points outside
/// the bounds (possible when the anchor is outside) are clamped into the
/// boundary bins, so the total mass is preserved.
///
/// # Errors
///
/// Rejects `bins == 0`; propagates generation errors.
pub fn empirical_pushforward(
    ifs: &Similarity1D,
    measure: &SymbolicMeasure,
    n: u32,
    z: f64,
    bins: usize,
) -> Result<Vec<f64>> {
    if bins == 0 {
        return Err(crate::IfsError::ZeroBins);
    }
    let cloud = point_cloud(ifs, measure, n, z)?;
    let (lo, hi) = ifs.attractor_bounds();
    let width = hi - lo;
    let mut histogram = vec![0.0f64; bins];
    for (word, &x) in cloud.words.iter().zip(&cloud.points) {
        let mass = measure.cylinder_mass(word);
        let idx = if width > 0.0 {
            (((x - lo) / width * bins as f64).floor() as isize).clamp(0, bins as isize - 1)
                as usize
        } else {
            0
        };
        histogram[idx] += mass;
    }
    Ok(histogram)
}
