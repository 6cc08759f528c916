use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::{CfError, ContinuedFraction, Result};

/// Which separation criterion admitted a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelProvenance {
    /// Some `q_m` satisfies `2 s q_m <= 2^n - 1 < q_m`.
    DiophLemma,
    /// The quotient after the boundary convergent satisfies
    /// `zeta_{m_n + 1} <= 1/(3s)`.
    CfLemma,
}

impl std::fmt::Display for LevelProvenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LevelProvenance::DiophLemma => write!(f, "dioph-lemma"),
            LevelProvenance::CfLemma => write!(f, "cf-lemma"),
        }
    }
}

/// A level `n` admitted by at least one separation criterion.
#[derive(Clone, Debug)]
pub struct GoodLevel {
    pub n: u32,
    /// Largest index with `q_m <= 2^n - 1 < q_{m+1}`.
    pub m_n: usize,
    pub dioph: bool,
    pub cf_lemma: bool,
    /// Levels below 3 sit outside the asymptotic regime of the criteria.
    pub provisional: bool,
}

impl GoodLevel {
    #[must_use]
    pub fn provenance(&self) -> Vec<LevelProvenance> {
        let mut out = Vec::new();
        if self.dioph {
            out.push(LevelProvenance::DiophLemma);
        }
        if self.cf_lemma {
            out.push(LevelProvenance::CfLemma);
        }
        out
    }
}

/// Levels `n <= n_max` that are good for scale `s`, with provenance.
///
/// For each `n`, the boundary index `m_n` is the largest index with
/// `q_{m_n} <= 2^n - 1 < q_{m_n + 1}`. The level is good when either the
/// diophantine criterion `2 s q_{m_n+1} <= 2^n - 1` or the quotient
/// criterion `3 s zeta_{m_n+1} <= 1` holds. Both predicates are evaluated
/// in exact integer arithmetic.
///
/// # Errors
///
/// Rejects `s` outside `(0, 1/2)` and `n_max = 0`. Finite expansions whose
/// denominators never exceed `2^n_max - 1` cannot place the boundary; the
/// error names the required bound.
pub fn good_levels(
    cf: &ContinuedFraction,
    s: &Ratio<BigInt>,
    n_max: u32,
) -> Result<Vec<GoodLevel>> {
    check_scale(s)?;
    if n_max == 0 {
        return Err(CfError::ZeroArgument { what: "n_max" });
    }
    let top = (BigInt::one() << n_max) - 1;
    let denominators = denominators_past(cf, &top)?;
    let (a, b) = (s.numer(), s.denom());

    let mut out = Vec::new();
    for n in 1..=n_max {
        let level_bound = (BigInt::one() << n) - 1;
        // First index whose denominator exceeds 2^n - 1; its predecessor
        // is the boundary index m_n.
        let next = denominators
            .iter()
            .position(|q| q > &level_bound)
            .expect("denominators extend past 2^n_max - 1");
        let m_n = next - 1;
        let q_next = &denominators[next];
        let zeta_next = cf
            .quotient(next)
            .expect("quotient exists wherever its convergent does");

        let dioph = BigInt::from(2) * a * q_next <= b * &level_bound;
        let cf_lemma = BigInt::from(3) * a * BigInt::from(zeta_next) <= *b;
        if dioph || cf_lemma {
            out.push(GoodLevel {
                n,
                m_n,
                dioph,
                cf_lemma,
                provisional: n < 3,
            });
        }
    }
    Ok(out)
}

/// Denominators `q_0, q_1, ...` up to and including the first one exceeding
/// `top`.
fn denominators_past(cf: &ContinuedFraction, top: &BigInt) -> Result<Vec<BigInt>> {
    let mut qs = Vec::new();
    for c in cf.convergent_stream() {
        let done = &c.q > top;
        qs.push(c.q);
        if done {
            return Ok(qs);
        }
    }
    Err(CfError::InsufficientDepth {
        required_q: top.clone() + 1,
        last_q: qs.last().cloned().unwrap_or_else(BigInt::zero),
    })
}

fn check_scale(s: &Ratio<BigInt>) -> Result<()> {
    let half = Ratio::new(BigInt::one(), BigInt::from(2));
    if s <= &Ratio::zero() || s >= &half {
        return Err(CfError::ScaleOutOfRange { s: s.to_string() });
    }
    Ok(())
}

/// Outcome of the quotient-growth density test.
#[derive(Clone, Debug)]
pub struct DensityCondition {
    /// `sum over m <= M with q_{m+1}/q_m >= L of log2(zeta_{m+1} + 1)`.
    pub lhs: f64,
    /// `epsilon * M`; infinite when epsilon is the infinity sentinel.
    pub bound: f64,
    pub satisfied: bool,
    /// Indices `m` that passed the ratio filter.
    pub contributing: Vec<usize>,
}

/// Evaluates the quotient-growth density condition over `1 <= m <= M`.
///
/// `epsilon = f64::INFINITY` is the always-satisfied sentinel.
///
/// # Errors
///
/// Rejects `M = 0`, non-positive `epsilon`, `L < 1`, and expansions with
/// fewer than `M + 1` quotients.
pub fn density_condition(
    cf: &ContinuedFraction,
    epsilon: f64,
    ratio_floor: f64,
    horizon: usize,
) -> Result<DensityCondition> {
    if horizon == 0 {
        return Err(CfError::ZeroArgument { what: "horizon" });
    }
    if epsilon <= 0.0 || epsilon.is_nan() {
        return Err(CfError::ZeroArgument { what: "epsilon" });
    }
    if ratio_floor < 1.0 || ratio_floor.is_nan() {
        return Err(CfError::ZeroArgument { what: "ratio_floor" });
    }
    let needed = horizon + 1;
    let mut qs = Vec::with_capacity(needed + 1);
    for c in cf.convergent_stream().take(needed + 1) {
        qs.push(c.q);
    }
    if qs.len() < needed + 1 {
        return Err(CfError::DepthTooShallow {
            required: needed,
            available: qs.len().saturating_sub(1),
        });
    }

    let mut lhs = 0.0;
    let mut contributing = Vec::new();
    for m in 1..=horizon {
        let ratio = qs[m + 1].to_f64().unwrap_or(f64::INFINITY)
            / qs[m].to_f64().unwrap_or(f64::INFINITY);
        if ratio >= ratio_floor {
            let zeta = cf
                .quotient(m + 1)
                .expect("quotient exists wherever its convergent does");
            lhs += (zeta as f64 + 1.0).log2();
            contributing.push(m);
        }
    }
    let bound = epsilon * horizon as f64;
    Ok(DensityCondition {
        lhs,
        bound,
        satisfied: lhs <= bound,
        contributing,
    })
}

/// Partial sums of the Gauss-measure quotient-entropy series.
#[derive(Clone, Debug)]
pub struct GaussPartial {
    /// Running sums `S_1, ..., S_M` of `mass(m) * log2(m + 1)`.
    pub cumulative: Vec<f64>,
    /// `sum of mass(m)` over `m <= M`; tends to 1 from below.
    pub total_mass: f64,
}

impl GaussPartial {
    #[must_use]
    pub fn value(&self) -> f64 {
        *self.cumulative.last().expect("horizon >= 1")
    }
}

/// Accumulates `mass(m) * log2(m + 1)` for `m <= horizon`, where `mass(m)`
/// is the Gauss measure of quotient value `m` in closed form,
/// `log2((m+1)^2 / (m (m+2)))`.
///
/// # Errors
///
/// Rejects `horizon = 0`.
pub fn gauss_condition_partial(horizon: usize) -> Result<GaussPartial> {
    if horizon == 0 {
        return Err(CfError::ZeroArgument { what: "horizon" });
    }
    let mut cumulative = Vec::with_capacity(horizon);
    let mut sum = 0.0;
    let mut total_mass = 0.0;
    for m in 1..=horizon {
        let m = m as f64;
        let mass = ((m + 1.0) * (m + 1.0) / (m * (m + 2.0))).log2();
        total_mass += mass;
        sum += mass * (m + 1.0).log2();
        cumulative.push(sum);
    }
    Ok(GaussPartial {
        cumulative,
        total_mass,
    })
}
