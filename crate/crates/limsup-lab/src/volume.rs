use symbolic::{RateFunction, SumVerdict, SymbolicMeasure};

use crate::{LimsupError, Result};

/// Factors within this distance of 1 are treated as critical when
/// classifying the closed-form series.
const CRITICAL_MARGIN: f64 = 1e-9;

/// Empirical cutoff: a tabulated series whose last term is below this reads
/// as convergent at the horizon.
const TAIL_CUTOFF: f64 = 1e-12;

/// Partial sums of the level volume series `sum over n of C^n h(n)^sigma`,
/// where `C = sum of p_i^sigma` over the digit probabilities. For a
/// Bernoulli measure this is exactly the sum of `(m([a]) h(|a|))^sigma` over
/// all words, grouped by length.
#[derive(Clone, Debug)]
pub struct VolumeSum {
    pub sigma: f64,
    /// The per-level branching factor `C`.
    pub branching: f64,
    /// Entry n-1 is the partial sum through level n.
    pub partials: Vec<f64>,
    pub total: f64,
    /// Definitive for closed-form rates, `*Looking` for tabulated data.
    pub verdict: SumVerdict,
}

/// Evaluates the volume series truncated at `n_max` and classifies its
/// convergence.
///
/// # Errors
///
/// [`LimsupError::BadExponent`] unless `sigma` is positive and finite,
/// [`LimsupError::ZeroHorizon`] when `n_max` is 0; rate evaluation errors
/// pass through.
pub fn volume_sum(
    measure: &SymbolicMeasure,
    h: &RateFunction,
    sigma: f64,
    n_max: u32,
) -> Result<VolumeSum> {
    if !(sigma.is_finite() && sigma > 0.0) {
        return Err(LimsupError::BadExponent { sigma });
    }
    if n_max == 0 {
        return Err(LimsupError::ZeroHorizon);
    }
    let pow_sigma = |x: f64| if sigma == 1.0 { x } else { x.powf(sigma) };
    let branching: f64 = measure.probabilities().iter().map(|&p| pow_sigma(p)).sum();

    let mut partials = Vec::with_capacity(n_max as usize);
    let mut total = 0.0;
    let mut weight = 1.0;
    let mut last_term = 0.0;
    for n in 1..=n_max {
        weight *= branching;
        last_term = weight * pow_sigma(h.eval(n)?);
        total += last_term;
        partials.push(total);
    }

    let verdict = classify(h, sigma, branching, last_term);
    Ok(VolumeSum {
        sigma,
        branching,
        partials,
        total,
        verdict,
    })
}

/// Convergence of the untruncated series. Closed-form rates reduce to the
/// growth factor of consecutive terms; a factor at the critical value 1
/// leaves a polynomial tail decided by `sigma`.
fn classify(h: &RateFunction, sigma: f64, branching: f64, last_term: f64) -> SumVerdict {
    match h {
        RateFunction::IndicatorOnLevels { .. } => SumVerdict::Convergent,
        RateFunction::Tabulated { .. } => {
            if last_term <= TAIL_CUTOFF {
                SumVerdict::ConvergentLooking
            } else {
                SumVerdict::DivergentLooking
            }
        }
        RateFunction::Constant(c) => {
            if *c == 0.0 {
                SumVerdict::Convergent
            } else {
                // Terms are c^sigma * branching^n: geometric with ratio
                // `branching`, constant at the critical value.
                factor_verdict(branching, SumVerdict::Divergent)
            }
        }
        RateFunction::Reciprocal => {
            let critical = if sigma > 1.0 {
                SumVerdict::Convergent
            } else {
                SumVerdict::Divergent
            };
            factor_verdict(branching, critical)
        }
        RateFunction::ReciprocalSquare => {
            let critical = if 2.0 * sigma > 1.0 {
                SumVerdict::Convergent
            } else {
                SumVerdict::Divergent
            };
            factor_verdict(branching, critical)
        }
        RateFunction::Geometric { rho } => {
            if *rho == 0.0 {
                SumVerdict::Convergent
            } else {
                let rho_sigma = if sigma == 1.0 { *rho } else { rho.powf(sigma) };
                factor_verdict(branching * rho_sigma, SumVerdict::Divergent)
            }
        }
    }
}

fn factor_verdict(factor: f64, critical: SumVerdict) -> SumVerdict {
    if factor < 1.0 - CRITICAL_MARGIN {
        SumVerdict::Convergent
    } else if factor > 1.0 + CRITICAL_MARGIN {
        SumVerdict::Divergent
    } else {
        critical
    }
}

/// Predicted box dimension `1 / (1 + s)` of the shrinking-target set with
/// radius exponent s.
///
/// # Errors
///
/// [`LimsupError::NonPositiveScale`] unless `s` is positive and finite.
pub fn mt_predict(s: f64) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) {
        return Err(LimsupError::NonPositiveScale { s });
    }
    Ok(1.0 / (1.0 + s))
}
