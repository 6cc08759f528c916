use std::fmt;
use std::path::Path;

use crate::{Result, SymbolicError};

/// A bounded rate function `h: N -> [0, infinity)` driving shrinking-target
/// radii. Boundedness keeps the target sets inside the attractor.
#[derive(Clone, Debug, PartialEq)]
pub enum RateFunction {
    /// `h(n) = c` with `c >= 0`.
    Constant(f64),
    /// `h(n) = 1/n`.
    Reciprocal,
    /// `h(n) = 1/n^2`.
    ReciprocalSquare,
    /// `h(n) = rho^n` with `rho` in `(0, 1)`.
    Geometric { rho: f64 },
    /// `h(n) = value` for `n` in the level set, 0 elsewhere.
    IndicatorOnLevels { levels: Vec<u32>, value: f64 },
    /// `h(n) = values[n-1]`, finite horizon.
    Tabulated { values: Vec<f64> },
}

/// Definitive verdicts come from closed forms; `*Looking` verdicts are
/// empirical reads of the partial sums at the requested horizon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumVerdict {
    Divergent,
    Convergent,
    DivergentLooking,
    ConvergentLooking,
}

impl SumVerdict {
    /// True for both the definitive and the empirical divergent verdicts.
    #[must_use]
    pub fn leans_divergent(self) -> bool {
        matches!(self, SumVerdict::Divergent | SumVerdict::DivergentLooking)
    }
}

/// Membership flag for the divergence classes used by the coverage theory.
///
/// `Member` and `NonMember` are hand-verified facts about the built-in kinds.
/// `SufficientHolds` means the table passed the sufficient test
/// (non-increasing with divergent-looking sum implies membership in the weak
/// class); `Unknown` means no decision procedure applies to the given data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFlag {
    Member,
    NonMember,
    SufficientHolds,
    Unknown,
}

/// Result of probing the partial sums of a rate function.
///
/// `in_h` refers to the class of rates whose sum diverges along every set of
/// upper density close to 1; `in_h_star` to the weaker class quantified over
/// sets of lower density close to 1. The first class is contained in the
/// second, and every non-increasing rate with divergent sum lies in the
/// second.
#[derive(Clone, Debug)]
pub struct RateDivergence {
    pub horizon: u32,
    pub partial_sum: f64,
    pub verdict: SumVerdict,
    pub in_h: ClassFlag,
    pub in_h_star: ClassFlag,
}

impl RateFunction {
    /// Validates parameters. Every kind must be non-negative and bounded.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(SymbolicError::BadRate(msg));
        match self {
            RateFunction::Constant(c) => {
                if !(c.is_finite() && *c >= 0.0) {
                    return bad(format!("constant must be finite and >= 0, got {c}"));
                }
            }
            RateFunction::Geometric { rho } => {
                if !(rho.is_finite() && *rho > 0.0 && *rho < 1.0) {
                    return bad(format!("geometric ratio must lie in (0,1), got {rho}"));
                }
            }
            RateFunction::IndicatorOnLevels { levels, value } => {
                if levels.is_empty() {
                    return bad("indicator level set must be non-empty".into());
                }
                if !levels.windows(2).all(|w| w[0] < w[1]) {
                    return bad("indicator levels must be strictly increasing".into());
                }
                if levels[0] == 0 {
                    return bad("indicator levels start at 1".into());
                }
                if !(value.is_finite() && *value >= 0.0) {
                    return bad(format!("indicator value must be >= 0, got {value}"));
                }
            }
            RateFunction::Tabulated { values } => {
                if values.is_empty() {
                    return bad("rate table must be non-empty".into());
                }
                if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
                    return bad(format!("rate table entries must be >= 0, got {v}"));
                }
            }
            RateFunction::Reciprocal | RateFunction::ReciprocalSquare => {}
        }
        Ok(())
    }

    /// Evaluates `h(n)` for `n >= 1`.
    ///
    /// # Errors
    ///
    /// Rejects `n == 0`, and tabulated kinds past the end of their table.
    pub fn eval(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(SymbolicError::BadRate("rate evaluated at n = 0".into()));
        }
        Ok(match self {
            RateFunction::Constant(c) => *c,
            RateFunction::Reciprocal => 1.0 / f64::from(n),
            RateFunction::ReciprocalSquare => {
                let x = f64::from(n);
                1.0 / (x * x)
            }
            RateFunction::Geometric { rho } => rho.powi(n as i32),
            RateFunction::IndicatorOnLevels { levels, value } => {
                if levels.binary_search(&n).is_ok() {
                    *value
                } else {
                    0.0
                }
            }
            RateFunction::Tabulated { values } => {
                *values
                    .get(n as usize - 1)
                    .ok_or(SymbolicError::TableTooShort {
                        needed: n,
                        len: values.len(),
                    })?
            }
        })
    }

    /// `sum of h(n) for n = 1..=horizon`.
    pub fn partial_sum(&self, horizon: u32) -> Result<f64> {
        let mut acc = 0.0;
        for n in 1..=horizon {
            acc += self.eval(n)?;
        }
        Ok(acc)
    }

    /// Partial sums plus divergence verdict and class flags.
    ///
    /// Built-in kinds carry closed-form verdicts and hand-verified class
    /// facts: constants `c > 0` and the reciprocal diverge along every set of
    /// positive upper density, while geometric and reciprocal-square sums
    /// converge outright. Indicator and tabulated kinds only get empirical
    /// verdicts, with the sufficient test applied to tables.
    pub fn rate_divergence(&self, horizon: u32) -> Result<RateDivergence> {
        self.validate()?;
        if horizon == 0 {
            return Err(SymbolicError::BadRate("horizon must be >= 1".into()));
        }
        let partial_sum = self.partial_sum(horizon)?;
        let (verdict, in_h, in_h_star) = match self {
            RateFunction::Constant(c) if *c > 0.0 => {
                (SumVerdict::Divergent, ClassFlag::Member, ClassFlag::Member)
            }
            RateFunction::Constant(_) => (
                SumVerdict::Convergent,
                ClassFlag::NonMember,
                ClassFlag::NonMember,
            ),
            RateFunction::Reciprocal => {
                (SumVerdict::Divergent, ClassFlag::Member, ClassFlag::Member)
            }
            RateFunction::ReciprocalSquare | RateFunction::Geometric { .. } => (
                SumVerdict::Convergent,
                ClassFlag::NonMember,
                ClassFlag::NonMember,
            ),
            RateFunction::IndicatorOnLevels { .. } => (
                self.empirical_verdict(horizon)?,
                ClassFlag::Unknown,
                ClassFlag::Unknown,
            ),
            RateFunction::Tabulated { values } => {
                let verdict = self.empirical_verdict(horizon)?;
                let non_increasing = values.windows(2).all(|w| w[0] >= w[1]);
                let in_h_star = if non_increasing && verdict.leans_divergent() {
                    ClassFlag::SufficientHolds
                } else {
                    ClassFlag::Unknown
                };
                (verdict, ClassFlag::Unknown, in_h_star)
            }
        };
        Ok(RateDivergence {
            horizon,
            partial_sum,
            verdict,
            in_h,
            in_h_star,
        })
    }

    /// Tail-increment heuristic: divergent-looking when the second half of
    /// the horizon still contributes a non-negligible share of the sum.
    fn empirical_verdict(&self, horizon: u32) -> Result<SumVerdict> {
        let full = self.partial_sum(horizon)?;
        let half = self.partial_sum(horizon / 2)?;
        let tail = full - half;
        if tail > 1e-6 * full.max(1.0) {
            Ok(SumVerdict::DivergentLooking)
        } else {
            Ok(SumVerdict::ConvergentLooking)
        }
    }

    /// Parses a rate spec string.
    ///
    /// Grammar: `constant(c)`, `reciprocal`, `reciprocal-square`,
    /// `geometric(rho)`, `indicator(value@n1,n2,...)`, `table(path)` with a
    /// newline-separated value file.
    pub fn parse(spec: &str) -> Result<Self> {
        let err = |reason: &str| SymbolicError::ParseRate {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let spec = spec.trim();
        let rate = match spec {
            "reciprocal" => RateFunction::Reciprocal,
            "reciprocal-square" => RateFunction::ReciprocalSquare,
            _ => {
                let (kind, arg) = spec
                    .strip_suffix(')')
                    .and_then(|s| s.split_once('('))
                    .ok_or_else(|| err("expected kind or kind(args)"))?;
                match kind {
                    "constant" => RateFunction::Constant(
                        arg.trim().parse().map_err(|_| err("bad constant"))?,
                    ),
                    "geometric" => RateFunction::Geometric {
                        rho: arg.trim().parse().map_err(|_| err("bad ratio"))?,
                    },
                    "indicator" => {
                        let (value, levels) =
                            arg.split_once('@').ok_or_else(|| err("expected value@levels"))?;
                        let value = value.trim().parse().map_err(|_| err("bad value"))?;
                        let levels = levels
                            .split(',')
                            .map(|t| t.trim().parse::<u32>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| err("bad level list"))?;
                        RateFunction::IndicatorOnLevels { levels, value }
                    }
                    "table" => {
                        let text = std::fs::read_to_string(Path::new(arg.trim()))
                            .map_err(|e| err(&format!("cannot read table: {e}")))?;
                        let values = text
                            .lines()
                            .map(str::trim)
                            .filter(|l| !l.is_empty())
                            .map(|l| l.parse::<f64>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| err("bad table entry"))?;
                        RateFunction::Tabulated { values }
                    }
                    _ => return Err(err("unknown rate kind")),
                }
            }
        };
        rate.validate()?;
        Ok(rate)
    }
}

impl fmt::Display for RateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RateFunction::Constant(c) => write!(f, "constant({c})"),
            RateFunction::Reciprocal => write!(f, "reciprocal"),
            RateFunction::ReciprocalSquare => write!(f, "reciprocal-square"),
            RateFunction::Geometric { rho } => write!(f, "geometric({rho})"),
            RateFunction::IndicatorOnLevels { levels, value } => {
                let list: Vec<String> = levels.iter().map(u32::to_string).collect();
                write!(f, "indicator({value}@{})", list.join(","))
            }
            RateFunction::Tabulated { values } => write!(f, "table[{} entries]", values.len()),
        }
    }
}
