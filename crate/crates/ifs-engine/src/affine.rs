use nalgebra::{DMatrix, DVector};
use symbolic::Word;

use crate::{IfsError, Result};

const CLASSIFY_TOLERANCE: f64 = 1e-9;

/// An affine map `x -> A x + t` in dimension 1 through 3.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMapNd {
    pub matrix: DMatrix<f64>,
    pub trans: DVector<f64>,
}

impl AffineMapNd {
    #[must_use]
    pub fn identity(dim: usize) -> Self {
        AffineMapNd {
            matrix: DMatrix::identity(dim, dim),
            trans: DVector::zeros(dim),
        }
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.trans.len()
    }

    #[must_use]
    pub fn apply(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.matrix * x + &self.trans
    }

    /// Composition `self after other`.
    #[must_use]
    pub fn compose(&self, other: &AffineMapNd) -> AffineMapNd {
        AffineMapNd {
            matrix: &self.matrix * &other.matrix,
            trans: &self.matrix * &other.trans + &self.trans,
        }
    }

    /// Largest singular value of the matrix part.
    #[must_use]
    pub fn operator_norm(&self) -> f64 {
        self.matrix
            .clone()
            .svd(false, false)
            .singular_values
            .iter()
            .copied()
            .fold(0.0, f64::max)
    }

    fn is_similarity(&self) -> bool {
        let gram = self.matrix.transpose() * &self.matrix;
        let c2 = gram[(0, 0)];
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { c2 } else { 0.0 };
                if (gram[(i, j)] - expect).abs() > CLASSIFY_TOLERANCE {
                    return false;
                }
            }
        }
        true
    }

    fn is_diagonal(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                if i != j && self.matrix[(i, j)].abs() > CLASSIFY_TOLERANCE {
                    return false;
                }
            }
        }
        true
    }
}

/// Structural class of the matrix parts, used to pick evaluation paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuralTag {
    /// Every matrix is a scalar multiple of an orthogonal matrix.
    Similarity,
    /// Every matrix is diagonal.
    Diagonal,
    General,
}

/// An affine IFS with strictly contractive maps, dimension at most 3.
#[derive(Clone, Debug)]
pub struct AffineIfs {
    dim: usize,
    maps: Vec<AffineMapNd>,
    tag: StructuralTag,
}

impl AffineIfs {
    /// # Errors
    ///
    /// Rejects empty map lists, dimensions outside `1..=3`, mismatched
    /// dimensions, and any map whose largest singular value reaches 1.
    pub fn new(dim: usize, maps: Vec<AffineMapNd>) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(IfsError::BadDimension { dim });
        }
        if maps.is_empty() {
            return Err(IfsError::NoMaps);
        }
        for (index, map) in maps.iter().enumerate() {
            if map.dim() != dim || map.matrix.nrows() != dim || map.matrix.ncols() != dim {
                return Err(IfsError::DimensionMismatch {
                    expected: dim,
                    got: map.dim(),
                });
            }
            let norm = map.operator_norm();
            if norm >= 1.0 || norm.is_nan() {
                return Err(IfsError::NotContractive { index, norm });
            }
        }
        let tag = if maps.iter().all(AffineMapNd::is_similarity) {
            StructuralTag::Similarity
        } else if maps.iter().all(AffineMapNd::is_diagonal) {
            StructuralTag::Diagonal
        } else {
            StructuralTag::General
        };
        Ok(AffineIfs { dim, maps, tag })
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[must_use]
    pub fn maps(&self) -> &[AffineMapNd] {
        &self.maps
    }

    #[must_use]
    pub fn alphabet_size(&self) -> usize {
        self.maps.len()
    }

    #[must_use]
    pub fn tag(&self) -> StructuralTag {
        self.tag
    }

    /// The map for 1-based symbol `i`.
    ///
    /// # Errors
    ///
    /// Rejects symbols outside `1..=alphabet_size`.
    pub fn map(&self, symbol: u8) -> Result<&AffineMapNd> {
        let idx = symbol as usize;
        if symbol == 0 || idx > self.maps.len() {
            return Err(IfsError::SymbolOutOfRange {
                symbol,
                alphabet: self.maps.len(),
            });
        }
        Ok(&self.maps[idx - 1])
    }

    /// The composition along a word, first symbol outermost.
    ///
    /// # Errors
    ///
    /// Rejects words with out-of-range symbols.
    pub fn compose_map(&self, word: &Word) -> Result<AffineMapNd> {
        let mut acc = AffineMapNd::identity(self.dim);
        for &symbol in word.digits() {
            acc = acc.compose(self.map(symbol)?);
        }
        Ok(acc)
    }

    #[must_use]
    pub fn max_norm(&self) -> f64 {
        self.maps
            .iter()
            .map(AffineMapNd::operator_norm)
            .fold(0.0, f64::max)
    }

    /// Radius of the smallest origin-centered ball `B` with
    /// `norm(A_i) R + |t_i| <= R` for every map, so every map sends `B`
    /// into itself.
    #[must_use]
    pub fn attractor_radius(&self) -> f64 {
        self.maps
            .iter()
            .map(|m| m.trans.norm() / (1.0 - m.operator_norm()))
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotation_scaling(scale: f64, angle: f64, tx: f64, ty: f64) -> AffineMapNd {
        let (s, c) = angle.sin_cos();
        AffineMapNd {
            matrix: DMatrix::from_row_slice(2, 2, &[scale * c, -scale * s, scale * s, scale * c]),
            trans: DVector::from_column_slice(&[tx, ty]),
        }
    }

    #[test]
    fn rotation_scaling_is_classified_similarity() {
        let ifs = AffineIfs::new(
            2,
            vec![
                rotation_scaling(0.6, 0.5, 0.0, 0.0),
                rotation_scaling(0.6, -0.5, 1.0, 0.2),
            ],
        )
        .unwrap();
        assert_eq!(ifs.tag(), StructuralTag::Similarity);
        assert!((ifs.max_norm() - 0.6).abs() < 1e-12);
    }

    #[test]
    fn diagonal_and_general_tags() {
        let diag = AffineMapNd {
            matrix: DMatrix::from_row_slice(2, 2, &[0.5, 0.0, 0.0, 0.3]),
            trans: DVector::from_column_slice(&[0.0, 0.0]),
        };
        let ifs = AffineIfs::new(2, vec![diag]).unwrap();
        assert_eq!(ifs.tag(), StructuralTag::Diagonal);

        let shear = AffineMapNd {
            matrix: DMatrix::from_row_slice(2, 2, &[0.5, 0.2, 0.0, 0.3]),
            trans: DVector::from_column_slice(&[0.0, 0.0]),
        };
        let ifs = AffineIfs::new(2, vec![shear]).unwrap();
        assert_eq!(ifs.tag(), StructuralTag::General);
    }

    #[test]
    fn expansive_maps_are_rejected() {
        let too_big = rotation_scaling(1.2, 0.3, 0.0, 0.0);
        let err = AffineIfs::new(2, vec![too_big]).unwrap_err();
        match err {
            IfsError::NotContractive { index: 0, norm } => {
                assert!((norm - 1.2).abs() < 1e-9);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn shear_norm_exceeds_spectral_radius() {
        // Eigenvalues are 0.5 and 0.3 but the largest singular value of a
        // shear is bigger; the norm check must use singular values.
        let shear = AffineMapNd {
            matrix: DMatrix::from_row_slice(2, 2, &[0.5, 0.9, 0.0, 0.3]),
            trans: DVector::zeros(2),
        };
        assert!(shear.operator_norm() > 1.0);
        assert!(AffineIfs::new(2, vec![shear]).is_err());
    }

    #[test]
    fn composition_matches_pointwise_application() {
        let f = rotation_scaling(0.6, 0.5, 0.1, 0.2);
        let g = rotation_scaling(0.5, -0.3, -0.4, 0.7);
        let ifs = AffineIfs::new(2, vec![f.clone(), g.clone()]).unwrap();
        let w = Word::parse("121", 2).unwrap();
        let composed = ifs.compose_map(&w).unwrap();
        let x = DVector::from_column_slice(&[0.3, -0.8]);
        let direct = f.apply(&g.apply(&f.apply(&x)));
        assert!((composed.apply(&x) - direct).norm() < 1e-12);
    }

    #[test]
    fn invariant_ball_absorbs_every_map() {
        let ifs = AffineIfs::new(
            2,
            vec![
                rotation_scaling(0.6, 0.5, 0.3, 0.0),
                rotation_scaling(0.4, 1.0, -0.2, 0.9),
            ],
        )
        .unwrap();
        let radius = ifs.attractor_radius();
        for map in ifs.maps() {
            assert!(map.operator_norm() * radius + map.trans.norm() <= radius + 1e-12);
        }
    }

    #[test]
    fn dimension_limits_enforced() {
        assert!(AffineIfs::new(0, vec![]).is_err());
        assert!(AffineIfs::new(4, vec![AffineMapNd::identity(4)]).is_err());
        let m = AffineMapNd::identity(3);
        // Identity has norm exactly 1: rejected.
        assert!(AffineIfs::new(3, vec![m]).is_err());
    }
}
