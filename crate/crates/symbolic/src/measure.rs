use crate::{Result, SymbolicError, Word};

/// Construction tolerance for probability vectors. Vectors within this
/// distance of total mass 1 are renormalized; anything further is rejected.
const PROBABILITY_TOLERANCE: f64 = 1e-12;

/// A Bernoulli measure on the code space of infinite digit sequences.
///
/// The cylinder mass of a finite word is the product of the digit
/// probabilities. All probabilities are strictly positive, so the measure is
/// slowly decaying: the one-step mass ratio is bounded below by
/// [`SymbolicMeasure::slow_decay_constant`].
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicMeasure {
    probs: Vec<f64>,
}

impl SymbolicMeasure {
    /// Builds a Bernoulli measure from a probability vector.
    ///
    /// # Errors
    ///
    /// Rejects empty vectors, non-positive or non-finite entries, and vectors
    /// whose sum differs from 1 by more than `1e-12`.
    pub fn bernoulli(probs: &[f64]) -> Result<Self> {
        if probs.is_empty() {
            return Err(SymbolicError::EmptyProbabilities);
        }
        for (index, &value) in probs.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(SymbolicError::BadProbability { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_TOLERANCE {
            return Err(SymbolicError::ProbabilitySum { sum });
        }
        let probs = probs.iter().map(|p| p / sum).collect();
        Ok(SymbolicMeasure { probs })
    }

    /// The uniform measure on `l` symbols.
    ///
    /// # Panics
    ///
    /// Panics if `l == 0`.
    #[must_use]
    pub fn uniform(l: u8) -> Self {
        assert!(l >= 1, "alphabet must have at least one symbol");
        SymbolicMeasure {
            probs: vec![1.0 / f64::from(l); usize::from(l)],
        }
    }

    #[must_use]
    pub fn alphabet_size(&self) -> u8 {
        self.probs.len() as u8
    }

    #[must_use]
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// Probability of a single digit. Digits are 1-based.
    #[must_use]
    pub fn digit_probability(&self, digit: u8) -> f64 {
        self.probs[usize::from(digit) - 1]
    }

    /// Mass of the cylinder `[a]`, the product of digit probabilities.
    #[must_use]
    pub fn cylinder_mass(&self, word: &Word) -> f64 {
        word.digits()
            .iter()
            .map(|&d| self.probs[usize::from(d) - 1])
            .product()
    }

    /// The slow-decay constant `c`, the minimum digit probability.
    ///
    /// For Bernoulli measures the essential infimum of one-step cylinder mass
    /// ratios equals this minimum.
    #[must_use]
    pub fn slow_decay_constant(&self) -> f64 {
        self.probs.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Shannon entropy in nats, `-sum p_i ln p_i`.
    #[must_use]
    pub fn entropy(&self) -> f64 {
        -self.probs.iter().map(|p| p * p.ln()).sum::<f64>()
    }

    /// True if all digit probabilities are equal.
    #[must_use]
    pub fn is_uniform(&self) -> bool {
        let first = self.probs[0];
        self.probs.iter().all(|&p| (p - first).abs() <= 1e-15)
    }
}
