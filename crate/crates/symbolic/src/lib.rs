//! Code-space machinery for iterated function system experiments.
//!
//! This crate models the symbolic side of an IFS with `l` maps: finite words
//! over the alphabet `{1, ..., l}`, Bernoulli measures on the space of
//! infinite digit sequences, the stopping generations where cylinder mass
//! first drops below a geometric threshold, and the bounded rate functions
//! that drive shrinking-target constructions.
//!
//! Everything here is immutable after construction and safe to share across
//! threads.

#![forbid(unsafe_code)]

mod measure;
mod rate;
mod stopping;
mod word;

pub use measure::SymbolicMeasure;
pub use rate::{ClassFlag, RateDivergence, RateFunction, SumVerdict};
pub use stopping::{stopping_generation, stopping_generation_capped, StoppingGeneration};
pub use word::Word;

/// Default ceiling on the number of words a stopping generation may hold.
pub const DEFAULT_GENERATION_CAP: usize = 1 << 26;

/// Errors produced by symbolic-side constructions.
#[derive(Debug, thiserror::Error)]
pub enum SymbolicError {
    /// Probability vector does not sum to 1 within the construction tolerance.
    #[error("probabilities sum to {sum}, expected 1 within 1e-12")]
    ProbabilitySum { sum: f64 },

    /// Probability entries must be strictly positive and finite.
    #[error("probability at index {index} is {value}, expected a finite value > 0")]
    BadProbability { index: usize, value: f64 },

    /// Probability vector must be non-empty.
    #[error("empty probability vector")]
    EmptyProbabilities,

    /// A digit fell outside the alphabet.
    #[error("digit {digit} outside alphabet 1..={alphabet}")]
    DigitOutOfRange { digit: u8, alphabet: u8 },

    /// Stopping generations are defined for indices n >= 1.
    #[error("generation index must be >= 1, got {index}")]
    ZeroGenerationIndex { index: u32 },

    /// Enumeration would exceed the configured generation cap.
    #[error("stopping generation needs more than {cap} words (estimated cardinality {estimate:.3e})")]
    GenerationCap { cap: usize, estimate: f64 },

    /// Rate function parameter outside its admissible range.
    #[error("invalid rate function: {0}")]
    BadRate(String),

    /// Tabulated rate evaluated past the end of its table.
    #[error("rate table has {len} entries, needed index {needed}")]
    TableTooShort { needed: u32, len: usize },

    /// Rate-function spec string did not parse.
    #[error("cannot parse rate spec {spec:?}: {reason}")]
    ParseRate { spec: String, reason: String },
}

pub type Result<T> = std::result::Result<T, SymbolicError>;
