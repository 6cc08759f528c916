use symbolic::Word;

use crate::{IfsError, Result};

/// A one-dimensional affine map `x -> scale * x + trans`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Affine1D {
    pub scale: f64,
    pub trans: f64,
}

impl Affine1D {
    pub const IDENTITY: Affine1D = Affine1D {
        scale: 1.0,
        trans: 0.0,
    };

    #[must_use]
    pub fn apply(&self, x: f64) -> f64 {
        self.scale * x + self.trans
    }

    /// Composition `self after other`: `(self o other)(x) = self(other(x))`.
    #[must_use]
    pub fn compose(&self, other: &Affine1D) -> Affine1D {
        Affine1D {
            scale: self.scale * other.scale,
            trans: self.scale * other.trans + self.trans,
        }
    }

    /// Fixed point `trans / (1 - scale)` of a strict contraction.
    #[must_use]
    pub fn fixed_point(&self) -> f64 {
        self.trans / (1.0 - self.scale)
    }
}

/// A self-similar IFS `{ x -> lambda x + d_i }` on the line.
#[derive(Clone, Debug)]
pub struct Similarity1D {
    lambda: f64,
    digits: Vec<f64>,
}

impl Similarity1D {
    /// # Errors
    ///
    /// Rejects `lambda` outside `(0, 1)` and digit sets that are empty,
    /// non-finite, or contain duplicates.
    pub fn new(lambda: f64, digits: Vec<f64>) -> Result<Self> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(IfsError::InvalidContraction { lambda });
        }
        if digits.is_empty() {
            return Err(IfsError::EmptyDigits);
        }
        for &d in &digits {
            if !d.is_finite() {
                return Err(IfsError::NonFiniteDigit { digit: d });
            }
        }
        for i in 0..digits.len() {
            for j in (i + 1)..digits.len() {
                if digits[i] == digits[j] {
                    return Err(IfsError::DuplicateDigits {
                        a: digits[i],
                        b: digits[j],
                    });
                }
            }
        }
        Ok(Similarity1D { lambda, digits })
    }

    #[must_use]
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    #[must_use]
    pub fn digits(&self) -> &[f64] {
        &self.digits
    }

    #[must_use]
    pub fn alphabet_size(&self) -> usize {
        self.digits.len()
    }

    /// The map for 1-based symbol `i`.
    ///
    /// # Errors
    ///
    /// Rejects symbols outside `1..=alphabet_size`.
    pub fn map(&self, symbol: u8) -> Result<Affine1D> {
        let idx = symbol as usize;
        if symbol == 0 || idx > self.digits.len() {
            return Err(IfsError::SymbolOutOfRange {
                symbol,
                alphabet: self.digits.len(),
            });
        }
        Ok(Affine1D {
            scale: self.lambda,
            trans: self.digits[idx - 1],
        })
    }

    /// The composition along a word, first symbol outermost. The empty
    /// word yields the identity.
    ///
    /// # Errors
    ///
    /// Rejects words with out-of-range symbols.
    pub fn compose_map(&self, word: &Word) -> Result<Affine1D> {
        let mut scale = 1.0;
        let mut trans = 0.0;
        for &symbol in word.digits() {
            let m = self.map(symbol)?;
            // Accumulating left-to-right keeps the outermost map first:
            // after j symbols the pair represents phi_{w_1} o ... o phi_{w_j}.
            trans += scale * m.trans;
            scale *= m.scale;
        }
        Ok(Affine1D { scale, trans })
    }

    /// Smallest closed interval mapped into itself by every map:
    /// `[min D, max D] / (1 - lambda)`.
    #[must_use]
    pub fn attractor_bounds(&self) -> (f64, f64) {
        let lo = self.digits.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = self
            .digits
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        (lo / (1.0 - self.lambda), hi / (1.0 - self.lambda))
    }
}
