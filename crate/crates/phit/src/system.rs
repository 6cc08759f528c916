use contfrac::{ContinuedFraction, TSpec};
use ifs_engine::Similarity1D;
use num_bigint::BigInt;
use num_rational::Ratio;

use crate::Result;

/// Continued-fraction depth cached at construction. Periodic expansions
/// extend past this on demand; rational and table expansions are always
/// complete, so the cap only bounds the eagerly stored prefix.
const CACHED_DEPTH: usize = 64;

/// The four-map system `x -> (x + d) / 2` with offsets `{0, 1, t, 1 + t}`,
/// bundling the parameter `t` with its expanded continued fraction.
///
/// Depth-`n` images of the origin are exactly the values `(p + q t) / 2^n`
/// with `0 <= p, q <= 2^n - 1`, which is what every query in this crate
/// works with.
#[derive(Debug, Clone)]
pub struct PhiTSystem {
    spec: TSpec,
    cf: ContinuedFraction,
    t: f64,
}

impl PhiTSystem {
    /// Builds the system for the given parameter description.
    pub fn new(spec: TSpec) -> Result<Self> {
        let cf = ContinuedFraction::expand(&spec, CACHED_DEPTH)?;
        let t = cf.to_f64();
        Ok(Self { spec, cf, t })
    }

    /// Parses a parameter description and builds the system.
    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(TSpec::parse(spec)?)
    }

    /// The parameter description this system was built from.
    pub fn spec(&self) -> &TSpec {
        &self.spec
    }

    /// The expanded continued fraction of `t`.
    pub fn cf(&self) -> &ContinuedFraction {
        &self.cf
    }

    /// Double-precision surrogate for `t`, accurate to the last bit.
    pub fn t_f64(&self) -> f64 {
        self.t
    }

    /// Exact value of `t` when the parameter is rational.
    pub fn exact_value(&self) -> Option<&Ratio<BigInt>> {
        self.cf.exact_value()
    }

    /// Whether the parameter is a rational number.
    pub fn is_rational(&self) -> bool {
        self.cf.is_rational_kind()
    }

    /// The invariant interval `[0, 1 + t]` containing every image.
    pub fn attractor(&self) -> (f64, f64) {
        (0.0, 1.0 + self.t)
    }

    /// Floating-point view of the system as a similarity family with ratio
    /// `1/2` and offsets `{0, 1/2, t/2, (1 + t)/2}`. Fails for `t = 1`,
    /// where two offsets coincide.
    pub fn similarity(&self) -> Result<Similarity1D> {
        let digits = vec![0.0, 0.5, self.t / 2.0, (1.0 + self.t) / 2.0];
        Ok(Similarity1D::new(0.5, digits)?)
    }

    /// Value of the depth-`n` image with coordinates `(p, q)`.
    pub fn value_f64(&self, p: u64, q: u64, n: u32) -> f64 {
        (p as f64 + q as f64 * self.t) / (1u64 << n) as f64
    }
}
