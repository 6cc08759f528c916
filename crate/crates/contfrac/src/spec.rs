use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{CfError, Result};

/// Specification of a parameter `t` in `(0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TSpec {
    /// An exact rational in lowest terms.
    Rational(Ratio<BigInt>),
    /// Eventually periodic quotients: `preperiod` then `period` repeated
    /// forever. Denotes a quadratic irrational.
    Periodic {
        preperiod: Vec<u64>,
        period: Vec<u64>,
    },
    /// A finite quotient table. Denotes the exact rational value of the
    /// finite continued fraction; quotient-driven criteria read the table
    /// as given.
    Table(Vec<u64>),
}

impl TSpec {
    /// Parses the spec grammar:
    /// `rational:3/4`, `cf:[2;2]` (preperiod;period), `cftable:[1,100,1,1]`.
    pub fn parse(spec: &str) -> Result<Self> {
        let err = |reason: &str| CfError::ParseSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let spec = spec.trim();
        if let Some(body) = spec.strip_prefix("rational:") {
            let (num, den) = body.split_once('/').ok_or_else(|| err("expected p/q"))?;
            let num: BigInt = num.trim().parse().map_err(|_| err("bad numerator"))?;
            let den: BigInt = den.trim().parse().map_err(|_| err("bad denominator"))?;
            if den.is_zero() {
                return Err(err("zero denominator"));
            }
            let value = Ratio::new(num, den);
            if value <= Ratio::zero() || value > Ratio::one() {
                return Err(CfError::RationalOutOfRange {
                    value: value.to_string(),
                });
            }
            return Ok(TSpec::Rational(value));
        }
        if let Some(body) = spec.strip_prefix("cf:") {
            let body = body
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| err("expected [pre;period]"))?;
            let (pre, per) = body.split_once(';').ok_or_else(|| err("expected ';'"))?;
            let preperiod = parse_quotients(pre).map_err(|r| err(&r))?;
            let period = parse_quotients(per).map_err(|r| err(&r))?;
            if period.is_empty() {
                return Err(err("period must be non-empty"));
            }
            let spec = TSpec::Periodic { preperiod, period };
            spec.check_quotients()?;
            return Ok(spec);
        }
        if let Some(body) = spec.strip_prefix("cftable:") {
            let body = body
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| err("expected [z1,z2,...]"))?;
            let quotients = parse_quotients(body).map_err(|r| err(&r))?;
            if quotients.is_empty() {
                return Err(CfError::EmptyQuotients);
            }
            let spec = TSpec::Table(quotients);
            spec.check_quotients()?;
            return Ok(spec);
        }
        Err(err("expected rational:, cf: or cftable: prefix"))
    }

    /// True when the spec denotes an irrational number.
    #[must_use]
    pub fn is_irrational(&self) -> bool {
        matches!(self, TSpec::Periodic { .. })
    }

    pub(crate) fn check_quotients(&self) -> Result<()> {
        let lists: Vec<&[u64]> = match self {
            TSpec::Rational(_) => return Ok(()),
            TSpec::Periodic { preperiod, period } => vec![preperiod, period],
            TSpec::Table(q) => vec![q],
        };
        for list in lists {
            if let Some(position) = list.iter().position(|&z| z == 0) {
                return Err(CfError::ZeroQuotient { position });
            }
        }
        Ok(())
    }
}

fn parse_quotients(s: &str) -> std::result::Result<Vec<u64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad quotient {t:?}"))
        })
        .collect()
}

impl fmt::Display for TSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TSpec::Rational(r) => write!(f, "rational:{}/{}", r.numer(), r.denom()),
            TSpec::Periodic { preperiod, period } => {
                write!(f, "cf:[{};{}]", join(preperiod), join(period))
            }
            TSpec::Table(q) => write!(f, "cftable:[{}]", join(q)),
        }
    }
}

fn join(list: &[u64]) -> String {
    list.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_kinds() {
        assert!(matches!(
            TSpec::parse("rational:3/4").unwrap(),
            TSpec::Rational(_)
        ));
        assert_eq!(
            TSpec::parse("cf:[;1,2]").unwrap(),
            TSpec::Periodic {
                preperiod: vec![],
                period: vec![1, 2]
            }
        );
        assert_eq!(
            TSpec::parse("cftable:[1,100,1,1,1,1]").unwrap(),
            TSpec::Table(vec![1, 100, 1, 1, 1, 1])
        );
    }

    #[test]
    fn rejects_out_of_range_rationals() {
        assert!(TSpec::parse("rational:5/4").is_err());
        assert!(TSpec::parse("rational:0/1").is_err());
        assert!(TSpec::parse("rational:-1/2").is_err());
        assert!(TSpec::parse("rational:1/1").is_ok());
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(TSpec::parse("cf:[;]").is_err());
        assert!(TSpec::parse("cftable:[]").is_err());
        assert!(TSpec::parse("cf:[1,0;2]").is_err());
        assert!(TSpec::parse("something:1").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["rational:3/4", "cf:[2;2,1]", "cftable:[1,100,1]"] {
            let spec = TSpec::parse(s).unwrap();
            assert_eq!(TSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }
}
