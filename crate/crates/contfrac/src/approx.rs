use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed};

use crate::{CfError, ContinuedFraction, Result, TSpec};

/// Precision of rational surrogates for irrational `t`, in fractional bits.
const SURROGATE_BITS: u64 = 256;

/// The best rational approximation with denominator at most `Q`, together
/// with the approximation error `|q t - p|`.
#[derive(Clone, Debug)]
pub struct BestApprox {
    /// Convergent index when the minimizer came from the convergent list.
    pub m: Option<usize>,
    pub p: BigInt,
    pub q: BigInt,
    /// `|q t - p|`; exact when `t` is rational, otherwise evaluated from a
    /// surrogate within `2^-256` of `t`.
    pub error: Ratio<BigInt>,
    pub exact: bool,
}

/// Best-approximation error through the convergent list: the minimizer of
/// `|q t - p|` over `1 <= q <= bound` is the convergent with the largest
/// index whose denominator stays within the bound.
///
/// # Errors
///
/// Rejects `bound < 1`.
pub fn best_approx_error(cf: &ContinuedFraction, bound: &BigInt) -> Result<BestApprox> {
    if bound < &BigInt::one() {
        return Err(CfError::ZeroArgument { what: "bound" });
    }
    let mut best: Option<(usize, BigInt, BigInt)> = None;
    for c in cf.convergent_stream() {
        if &c.q > bound {
            break;
        }
        best = Some((c.m, c.p, c.q));
    }
    let (m, p, q) = best.expect("q_0 = 1 is within every bound >= 1");
    let (error, exact) = linear_error(cf, &p, &q);
    Ok(BestApprox {
        m: Some(m),
        p,
        q,
        error,
        exact,
    })
}

/// Independent oracle: minimizes `|q t - p|` by direct search over all
/// `1 <= q <= bound` with `p` the nearest integer to `q t`. Quadratic work,
/// intended for cross-checks at small bounds.
///
/// # Errors
///
/// Rejects `bound < 1`.
pub fn brute_force_best_approx(cf: &ContinuedFraction, bound: u64) -> Result<BestApprox> {
    if bound < 1 {
        return Err(CfError::ZeroArgument { what: "bound" });
    }
    let (t, exact) = match cf.exact_value() {
        Some(v) => (v.clone(), true),
        None => (cf.approx_value(SURROGATE_BITS), false),
    };
    let mut best: Option<(BigInt, BigInt, Ratio<BigInt>)> = None;
    for q in 1..=bound {
        let q = BigInt::from(q);
        let qt = Ratio::from_integer(q.clone()) * &t;
        let p = nearest_integer(&qt);
        let err = (qt - Ratio::from_integer(p.clone())).abs();
        let better = match &best {
            Some((_, _, e)) => &err < e,
            None => true,
        };
        if better {
            best = Some((p, q, err));
        }
    }
    let (p, q, error) = best.expect("bound >= 1 yields at least one candidate");
    Ok(BestApprox {
        m: None,
        p,
        q,
        error,
        exact,
    })
}

/// Verdict on whether the partial quotients of `t` are bounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BadlyApproximable {
    /// Periodic spec: the quotient set is finite, so the bound is final.
    BoundedDefinitive { max: u64 },
    /// Finite table: bounded over the examined prefix only.
    BoundedSoFar { max: u64, depth: usize },
    /// Exact rational input; the question degenerates.
    Rational,
    /// Finite table whose largest quotient dwarfs the median of the prefix.
    /// A growth heuristic, not a proof.
    UnboundedWitnessed {
        position: usize,
        quotient: u64,
        depth: usize,
    },
}

/// Classifies the quotient sequence of `t` over the first `depth` quotients
/// (clamped to the expansion length for finite kinds).
///
/// Periodic specs get a definitive verdict from the generator. Tables use a
/// growth heuristic: the verdict is `UnboundedWitnessed` when the largest
/// observed quotient exceeds ten times the median of the observed prefix.
///
/// # Errors
///
/// Rejects `depth < 1`.
pub fn is_badly_approximable(cf: &ContinuedFraction, depth: usize) -> Result<BadlyApproximable> {
    if depth == 0 {
        return Err(CfError::ZeroArgument { what: "depth" });
    }
    match cf.spec() {
        TSpec::Rational(_) => Ok(BadlyApproximable::Rational),
        TSpec::Periodic { preperiod, period } => {
            let max = preperiod
                .iter()
                .chain(period.iter())
                .copied()
                .max()
                .expect("period is non-empty");
            Ok(BadlyApproximable::BoundedDefinitive { max })
        }
        TSpec::Table(table) => {
            let depth = depth.min(table.len());
            let prefix = &table[..depth];
            let mut sorted = prefix.to_vec();
            sorted.sort_unstable();
            let median = if depth % 2 == 1 {
                sorted[depth / 2] as f64
            } else {
                (sorted[depth / 2 - 1] as f64 + sorted[depth / 2] as f64) / 2.0
            };
            let (pos, &max) = prefix
                .iter()
                .enumerate()
                .max_by_key(|(_, &z)| z)
                .expect("depth >= 1");
            if max as f64 > 10.0 * median {
                Ok(BadlyApproximable::UnboundedWitnessed {
                    position: pos + 1,
                    quotient: max,
                    depth,
                })
            } else {
                Ok(BadlyApproximable::BoundedSoFar { max, depth })
            }
        }
    }
}

/// `|q t - p|` with an exactness flag.
pub(crate) fn linear_error(
    cf: &ContinuedFraction,
    p: &BigInt,
    q: &BigInt,
) -> (Ratio<BigInt>, bool) {
    match cf.exact_value() {
        Some(v) => ((Ratio::from_integer(q.clone()) * v - p).abs(), true),
        None => {
            let t = cf.approx_value(SURROGATE_BITS);
            ((Ratio::from_integer(q.clone()) * t - p).abs(), false)
        }
    }
}

fn nearest_integer(x: &Ratio<BigInt>) -> BigInt {
    let two = BigInt::from(2);
    let shifted = Ratio::new(
        x.numer() * &two + x.denom(),
        x.denom() * two,
    );
    shifted.floor().to_integer()
}
