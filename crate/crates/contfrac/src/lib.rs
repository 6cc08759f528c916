//! Continued-fraction machinery with exact integer arithmetic.
//!
//! A parameter `t` in `(0, 1]` is specified as an exact rational, an
//! eventually periodic quotient list (quadratic irrationals), or a finite
//! quotient table. Convergents `p_m/q_m` follow the classical recurrence
//! `p_m = zeta_m p_{m-1} + p_{m-2}`, `q_m = zeta_m q_{m-1} + q_{m-2}` with
//! seeds `p_{-1} = 1, q_{-1} = 0, p_0 = 0, q_0 = 1`.
//!
//! Every predicate that can be decided in integer arithmetic is decided in
//! integer arithmetic; real values only appear through controlled-precision
//! rational surrogates.

#![forbid(unsafe_code)]

mod approx;
mod cf;
mod levels;
mod spec;

pub use approx::{
    best_approx_error, brute_force_best_approx, is_badly_approximable, BadlyApproximable,
    BestApprox,
};
pub use cf::{ContinuedFraction, Convergent, ConvergentStream};
pub use levels::{
    density_condition, gauss_condition_partial, good_levels, DensityCondition, GaussPartial,
    GoodLevel, LevelProvenance,
};
pub use spec::TSpec;

use num_bigint::BigInt;

/// Errors from continued-fraction constructions and level criteria.
#[derive(Debug, thiserror::Error)]
pub enum CfError {
    /// Rational parameters must lie in `(0, 1]`.
    #[error("rational parameter {value} outside (0, 1]")]
    RationalOutOfRange { value: String },

    /// All partial quotients must be >= 1.
    #[error("partial quotient at position {position} is 0")]
    ZeroQuotient { position: usize },

    /// Quotient lists must be non-empty.
    #[error("empty quotient list")]
    EmptyQuotients,

    /// A t-spec string did not parse.
    #[error("cannot parse t-spec {spec:?}: {reason}")]
    ParseSpec { spec: String, reason: String },

    /// Depth/horizon arguments must be >= 1.
    #[error("{what} must be >= 1")]
    ZeroArgument { what: &'static str },

    /// The quotient table ends before the convergents reach the bound the
    /// computation needs.
    #[error("insufficient depth: convergent denominators must exceed {required_q} but the expansion ends at {last_q}")]
    InsufficientDepth { required_q: BigInt, last_q: BigInt },

    /// The scale parameter of the level criteria must lie in `(0, 1/2)`.
    #[error("scale parameter s = {s} outside (0, 1/2)")]
    ScaleOutOfRange { s: String },

    /// The expansion has fewer materialized quotients than the computation
    /// needs.
    #[error("expansion too shallow: needs {required} quotients, has {available}")]
    DepthTooShallow { required: usize, available: usize },

    /// A Euclidean partial quotient does not fit in 64 bits.
    #[error("partial quotient at position {position} exceeds 64 bits")]
    QuotientOverflow { position: usize },
}

pub type Result<T> = std::result::Result<T, CfError>;
