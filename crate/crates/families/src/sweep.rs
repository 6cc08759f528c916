//! Separated-fraction sweeps across a family's parameter window.
//!
//! For each contraction ratio on a grid the sweep anchors a level-`n`
//! image cloud at the fixed point of a chosen composed map, extracts a
//! maximal `s lambda^n`-separated subset, and records the separated
//! fraction of the cloud. Thresholding the fractions against a grid of
//! cutoffs summarises how much of the window stays well separated.

use crate::{alpha_lower_bound, FamiliesError, FamilySpec, Result};
use ifs_engine::point_cloud;
use rayon::prelude::*;
use separation::{max_separated, min_gap};
use symbolic::{SymbolicMeasure, Word};

/// Grid and cloud parameters for one sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Smallest contraction ratio on the grid.
    pub lo: f64,
    /// Largest contraction ratio on the grid.
    pub hi: f64,
    /// Number of grid points, endpoints included.
    pub steps: usize,
    /// Separation scale; the radius at level `n` is `s * lambda^n`.
    pub s: f64,
    /// Cloud level.
    pub n: u32,
    /// Required slack between the grid and the admissible window.
    pub margin: f64,
    /// Thresholds at which the separated fractions are summarised.
    pub c_grid: Vec<f64>,
}

/// Sweep output: per-ratio separated fractions and their threshold summary.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub lambdas: Vec<f64>,
    /// Separated fraction of the cloud at each grid ratio.
    pub ratios: Vec<f64>,
    /// Smallest gap between cloud points at each grid ratio.
    pub min_gaps: Vec<f64>,
    pub c_grid: Vec<f64>,
    /// Fraction of grid ratios whose separated fraction reaches each
    /// threshold.
    pub fractions: Vec<f64>,
}

/// Runs a separated-fraction sweep over the grid in `config`.
///
/// The grid must sit inside the window bounded below by the measure's
/// slow-decay constant and above by the family's separation-exponent
/// bound, with `margin` to spare on both sides; outside that window the
/// separated fraction carries no information about the family.
pub fn lambda_sweep(
    family: &FamilySpec,
    measure: &SymbolicMeasure,
    z_word: &Word,
    config: &SweepConfig,
) -> Result<SweepResult> {
    let SweepConfig {
        lo,
        hi,
        steps,
        s,
        n,
        margin,
        ref c_grid,
    } = *config;
    if !(lo.is_finite() && hi.is_finite()) || !(lo < hi) || steps < 2 {
        return Err(FamiliesError::BadGrid { lo, hi, steps });
    }
    if !(s > 0.0 && s.is_finite()) {
        return Err(FamiliesError::BadScale { s });
    }
    if n == 0 {
        return Err(FamiliesError::ZeroLevel);
    }
    if !(margin >= 0.0 && margin.is_finite()) {
        return Err(FamiliesError::BadMargin { margin });
    }
    if c_grid.is_empty() || c_grid.iter().any(|c| !c.is_finite()) {
        return Err(FamiliesError::BadThresholdGrid);
    }
    if measure.probabilities().len() != family.digits().len() {
        return Err(FamiliesError::AlphabetMismatch {
            digits: family.digits().len(),
            alphabet: measure.probabilities().len(),
        });
    }
    if z_word.len() == 0 {
        return Err(FamiliesError::EmptyAnchorWord);
    }
    let window_lo = measure.slow_decay_constant();
    let window_hi = alpha_lower_bound(family).value;
    if lo < window_lo + margin || hi > window_hi - margin {
        return Err(FamiliesError::GridOutsideWindow {
            lo,
            hi,
            window_lo,
            window_hi,
        });
    }

    let step = (hi - lo) / (steps - 1) as f64;
    let lambdas: Vec<f64> = (0..steps).map(|i| lo + step * i as f64).collect();
    let samples: Vec<(f64, f64)> = lambdas
        .par_iter()
        .map(|&lambda| -> Result<(f64, f64)> {
            let ifs = family.ifs(lambda)?;
            let z = ifs.compose_map(z_word)?.fixed_point();
            let cloud = point_cloud(&ifs, measure, n, z)?;
            let radius = s * lambda.powi(n as i32);
            let separated = max_separated(&cloud.points, radius)?;
            let gap = min_gap(&cloud.points)?;
            Ok((separated.count() as f64 / cloud.cardinality() as f64, gap))
        })
        .collect::<Result<Vec<(f64, f64)>>>()?;
    let ratios: Vec<f64> = samples.iter().map(|&(ratio, _)| ratio).collect();
    let min_gaps: Vec<f64> = samples.iter().map(|&(_, gap)| gap).collect();
    let fractions = c_grid
        .iter()
        .map(|&c| ratios.iter().filter(|&&r| r >= c).count() as f64 / ratios.len() as f64)
        .collect();
    Ok(SweepResult {
        lambdas,
        ratios,
        min_gaps,
        c_grid: c_grid.clone(),
        fractions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anchor() -> Word {
        Word::new(vec![1], 2).unwrap()
    }

    fn base_config() -> SweepConfig {
        SweepConfig {
            lo: 0.52,
            hi: 0.65,
            steps: 16,
            s: 0.1,
            n: 6,
            margin: 0.01,
            c_grid: vec![0.2, 0.5, 0.8, 0.95],
        }
    }

    #[test]
    fn signed_digit_sweep_produces_sane_fractions() {
        let family = FamilySpec::bernoulli_convolution();
        let measure = SymbolicMeasure::uniform(2);
        let result = lambda_sweep(&family, &measure, &anchor(), &base_config()).unwrap();
        assert_eq!(result.lambdas.len(), 16);
        assert_eq!(result.ratios.len(), 16);
        assert_eq!(result.min_gaps.len(), 16);
        assert!((result.lambdas[0] - 0.52).abs() < 1e-12);
        assert!((result.lambdas[15] - 0.65).abs() < 1e-12);
        for &ratio in &result.ratios {
            assert!(ratio > 0.0 && ratio <= 1.0);
        }
        for &gap in &result.min_gaps {
            assert!(gap >= 0.0 && gap.is_finite());
        }
        assert_eq!(result.fractions.len(), 4);
        for pair in result.fractions.windows(2) {
            assert!(pair[0] >= pair[1]);
        }
        for &f in &result.fractions {
            assert!((0.0..=1.0).contains(&f));
        }
    }

    #[test]
    fn level_one_clouds_are_fully_separated() {
        let family = FamilySpec::bernoulli_convolution();
        let measure = SymbolicMeasure::uniform(2);
        let config = SweepConfig {
            n: 1,
            ..base_config()
        };
        let result = lambda_sweep(&family, &measure, &anchor(), &config).unwrap();
        for &ratio in &result.ratios {
            assert_eq!(ratio, 1.0);
        }
    }

    #[test]
    fn golden_parameter_depresses_the_separated_fraction() {
        let family = FamilySpec::bernoulli_convolution();
        let measure = SymbolicMeasure::uniform(2);
        let golden = (5.0f64.sqrt() - 1.0) / 2.0;
        let config = SweepConfig {
            lo: golden - 0.004,
            hi: golden + 0.004,
            steps: 3,
            s: 0.1,
            n: 10,
            margin: 0.005,
            c_grid: vec![0.5],
        };
        let result = lambda_sweep(&family, &measure, &anchor(), &config).unwrap();
        assert_eq!(result.ratios.len(), 3);
        let (left, mid, right) = (result.ratios[0], result.ratios[1], result.ratios[2]);
        assert!(mid < 0.5 * left);
        assert!(mid < 0.5 * right);
    }

    #[test]
    fn grid_must_respect_the_window() {
        let family = FamilySpec::bernoulli_convolution();
        let measure = SymbolicMeasure::uniform(2);
        let config = SweepConfig {
            lo: 0.5,
            hi: 0.668,
            ..base_config()
        };
        assert!(matches!(
            lambda_sweep(&family, &measure, &anchor(), &config),
            Err(FamiliesError::GridOutsideWindow { .. })
        ));
    }

    #[test]
    fn sweep_validates_inputs() {
        let family = FamilySpec::bernoulli_convolution();
        let measure = SymbolicMeasure::uniform(2);
        let word = anchor();

        let mut config = base_config();
        config.steps = 1;
        assert!(matches!(
            lambda_sweep(&family, &measure, &word, &config),
            Err(FamiliesError::BadGrid { .. })
        ));

        let mut config = base_config();
        config.s = 0.0;
        assert!(matches!(
            lambda_sweep(&family, &measure, &word, &config),
            Err(FamiliesError::BadScale { .. })
        ));

        let mut config = base_config();
        config.n = 0;
        assert!(matches!(
            lambda_sweep(&family, &measure, &word, &config),
            Err(FamiliesError::ZeroLevel)
        ));

        let mut config = base_config();
        config.margin = -0.1;
        assert!(matches!(
            lambda_sweep(&family, &measure, &word, &config),
            Err(FamiliesError::BadMargin { .. })
        ));

        let mut config = base_config();
        config.c_grid.clear();
        assert!(matches!(
            lambda_sweep(&family, &measure, &word, &config),
            Err(FamiliesError::BadThresholdGrid)
        ));

        let three = SymbolicMeasure::uniform(3);
        assert!(matches!(
            lambda_sweep(&family, &three, &word, &base_config()),
            Err(FamiliesError::AlphabetMismatch {
                digits: 2,
                alphabet: 3
            })
        ));

        let empty = Word::new(vec![], 2).unwrap();
        assert!(matches!(
            lambda_sweep(&family, &measure, &empty, &base_config()),
            Err(FamiliesError::EmptyAnchorWord)
        ));
    }
}
