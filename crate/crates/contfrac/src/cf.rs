use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::{CfError, Result, TSpec};

/// A materialized continued fraction with exact convergents.
///
/// Rational specs expand fully by the Euclidean algorithm in canonical form
/// (last quotient >= 2 except for the single-quotient expansion of 1).
/// Periodic specs materialize the requested depth but can produce quotients
/// and convergents past it on demand, since the generator is known. Tables
/// materialize exactly their own length.
#[derive(Clone, Debug)]
pub struct ContinuedFraction {
    spec: TSpec,
    quotients: Vec<u64>,
    // convergents[k] holds (p, q) for m = k - 1; seeds (1, 0) and (0, 1).
    convergents: Vec<(BigInt, BigInt)>,
    exact_value: Option<Ratio<BigInt>>,
}

impl ContinuedFraction {
    /// Expands a t-spec to the requested depth.
    ///
    /// # Errors
    ///
    /// Rejects `depth == 0` and invalid specs. Rational values outside
    /// `(0, 1]` are rejected at spec construction.
    pub fn expand(spec: &TSpec, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(CfError::ZeroArgument { what: "depth" });
        }
        spec.check_quotients()?;
        let quotients = match spec {
            TSpec::Rational(value) => euclid_quotients(value)?,
            TSpec::Periodic { preperiod, period } => {
                let mut q = Vec::with_capacity(depth);
                for m in 0..depth {
                    q.push(periodic_quotient(preperiod, period, m));
                }
                q
            }
            TSpec::Table(table) => {
                if table.is_empty() {
                    return Err(CfError::EmptyQuotients);
                }
                table.clone()
            }
        };

        let mut convergents = Vec::with_capacity(quotients.len() + 2);
        convergents.push((BigInt::from(1), BigInt::from(0)));
        convergents.push((BigInt::from(0), BigInt::from(1)));
        for &z in &quotients {
            let (p1, q1) = convergents[convergents.len() - 1].clone();
            let (p2, q2) = convergents[convergents.len() - 2].clone();
            let z = BigInt::from(z);
            convergents.push((&z * p1 + p2, z * q1 + q2));
        }

        let exact_value = match spec {
            TSpec::Rational(v) => Some(v.clone()),
            TSpec::Table(_) => {
                let (p, q) = &convergents[convergents.len() - 1];
                Some(Ratio::new(p.clone(), q.clone()))
            }
            TSpec::Periodic { .. } => None,
        };

        Ok(ContinuedFraction {
            spec: spec.clone(),
            quotients,
            convergents,
            exact_value,
        })
    }

    #[must_use]
    pub fn spec(&self) -> &TSpec {
        &self.spec
    }

    /// Number of materialized quotients.
    #[must_use]
    pub fn depth(&self) -> usize {
        self.quotients.len()
    }

    #[must_use]
    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// The partial quotient `zeta_m` (1-based). For periodic specs this is
    /// defined for every `m >= 1`; for rationals and tables it is `None`
    /// past the end of the expansion.
    #[must_use]
    pub fn quotient(&self, m: usize) -> Option<u64> {
        if m == 0 {
            return None;
        }
        match &self.spec {
            TSpec::Periodic { preperiod, period } => {
                Some(periodic_quotient(preperiod, period, m - 1))
            }
            _ => self.quotients.get(m - 1).copied(),
        }
    }

    /// The convergent `(p_m, q_m)` for `0 <= m <= depth`.
    ///
    /// # Panics
    ///
    /// Panics if `m > depth`.
    #[must_use]
    pub fn convergent(&self, m: usize) -> (&BigInt, &BigInt) {
        let (p, q) = &self.convergents[m + 1];
        (p, q)
    }

    /// Exact value for rational and table kinds, `None` for irrationals.
    #[must_use]
    pub fn exact_value(&self) -> Option<&Ratio<BigInt>> {
        self.exact_value.as_ref()
    }

    /// True for kinds with an exact rational value (rational and table).
    #[must_use]
    pub fn is_rational_kind(&self) -> bool {
        self.exact_value.is_some()
    }

    /// Iterator over convergents `(m, p_m, q_m)` starting at `m = 0`,
    /// extending past the materialized depth for periodic specs and ending
    /// at the expansion end otherwise.
    #[must_use]
    pub fn convergent_stream(&self) -> ConvergentStream<'_> {
        ConvergentStream {
            cf: self,
            m: 0,
            prev: (BigInt::from(1), BigInt::from(0)),
            cur: (BigInt::from(0), BigInt::from(1)),
        }
    }

    /// A rational surrogate within `2^-bits` of `t`.
    ///
    /// Exact for rational and table kinds. For periodic kinds, returns the
    /// first convergent with `q_m^2 >= 2^bits`, whose distance to `t` is
    /// below `1/q_m^2`.
    #[must_use]
    pub fn approx_value(&self, bits: u64) -> Ratio<BigInt> {
        if let Some(v) = &self.exact_value {
            return v.clone();
        }
        let target = (bits + 1).div_ceil(2);
        for c in self.convergent_stream() {
            if c.q.bits() > target {
                return Ratio::new(c.p, c.q);
            }
        }
        unreachable!("periodic convergent stream is infinite");
    }

    /// Double-precision value of `t`.
    #[must_use]
    pub fn to_f64(&self) -> f64 {
        self.approx_value(80).to_f64().expect("t lies in (0, 1]")
    }

    /// Exact sign of the linear form `a + b t`.
    ///
    /// Decided by exact rational arithmetic when `t` is rational, and by
    /// refining the convergent interval otherwise. For irrational `t` the
    /// form vanishes only when `a = b = 0`, so the refinement terminates.
    #[must_use]
    pub fn sign_linear(&self, a: &BigInt, b: &BigInt) -> Ordering {
        if b.is_zero() {
            return sign_to_ordering(a.sign());
        }
        if let Some(v) = &self.exact_value {
            let lhs = a * v.denom() + b * v.numer();
            return sign_to_ordering(lhs.sign());
        }
        // Even-index convergents lie below t, odd-index ones above. If an
        // endpoint evaluates to zero the sign of a + b t is the sign of
        // b * (t - p_m/q_m).
        let side = |m: usize, b: &BigInt| -> Ordering {
            let below = m.is_multiple_of(2);
            let positive = (b.sign() == Sign::Plus) == below;
            if positive {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        };
        let mut last: Option<Ordering> = None;
        let mut last_m = 0usize;
        for c in self.convergent_stream().take(20_000) {
            let at_convergent = sign_to_ordering((a * &c.q + b * &c.p).sign());
            if at_convergent == Ordering::Equal {
                return side(c.m, b);
            }
            if let Some(prev) = last {
                if prev == at_convergent {
                    return at_convergent;
                }
            }
            last = Some(at_convergent);
            last_m = c.m;
        }
        unreachable!("sign of {a} + {b} t undecided after convergent {last_m}");
    }

    /// Exact comparison of `|q t - p|` against a non-negative rational.
    #[must_use]
    pub fn cmp_abs_linear(&self, p: &BigInt, q: &BigInt, rhs: &Ratio<BigInt>) -> Ordering {
        let (rn, rd) = (rhs.numer(), rhs.denom());
        match self.sign_linear(&-p, q) {
            Ordering::Equal => BigInt::zero().cmp(rn),
            Ordering::Greater => self.sign_linear(&(-(p * rd) - rn), &(q * rd)),
            Ordering::Less => self.sign_linear(&(p * rd - rn), &(-(q * rd))),
        }
    }
}

/// One convergent of the stream.
#[derive(Clone, Debug)]
pub struct Convergent {
    pub m: usize,
    pub p: BigInt,
    pub q: BigInt,
}

/// On-the-fly convergent iterator. Does not touch the materialized cache,
/// so it is safe to run arbitrarily deep on periodic specs.
pub struct ConvergentStream<'a> {
    cf: &'a ContinuedFraction,
    m: usize,
    prev: (BigInt, BigInt),
    cur: (BigInt, BigInt),
}

impl Iterator for ConvergentStream<'_> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        if self.m == 0 {
            self.m = 1;
            return Some(Convergent {
                m: 0,
                p: BigInt::from(0),
                q: BigInt::from(1),
            });
        }
        let z = BigInt::from(self.cf.quotient(self.m)?);
        let p = &z * &self.cur.0 + &self.prev.0;
        let q = z * &self.cur.1 + &self.prev.1;
        self.prev = std::mem::replace(&mut self.cur, (p.clone(), q.clone()));
        let m = self.m;
        self.m += 1;
        Some(Convergent { m, p, q })
    }
}

fn periodic_quotient(preperiod: &[u64], period: &[u64], index: usize) -> u64 {
    if index < preperiod.len() {
        preperiod[index]
    } else {
        period[(index - preperiod.len()) % period.len()]
    }
}

fn euclid_quotients(value: &Ratio<BigInt>) -> Result<Vec<u64>> {
    if value <= &Ratio::zero() || value > &Ratio::from_integer(BigInt::from(1)) {
        return Err(CfError::RationalOutOfRange {
            value: value.to_string(),
        });
    }
    let mut r0 = value.denom().clone();
    let mut r1 = value.numer().clone();
    let mut quotients = Vec::new();
    while !r1.is_zero() {
        let z = &r0 / &r1;
        let rem = &r0 % &r1;
        let z = z.to_u64().ok_or(CfError::QuotientOverflow {
            position: quotients.len() + 1,
        })?;
        quotients.push(z);
        r0 = r1;
        r1 = rem;
    }
    Ok(quotients)
}

fn sign_to_ordering(sign: Sign) -> Ordering {
    match sign {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}
