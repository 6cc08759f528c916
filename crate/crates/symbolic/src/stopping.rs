use crate::{Result, SymbolicError, SymbolicMeasure, Word, DEFAULT_GENERATION_CAP};

/// The stopping generation `L_n` of a measure: the antichain of words whose
/// cylinder mass first drops to at most `c^n`, where `c` is the slow-decay
/// constant.
///
/// Every member word `a` satisfies `m([a]) <= c^n < m([parent(a)])`, the
/// member cylinders are pairwise disjoint, and their masses sum to 1.
#[derive(Clone, Debug)]
pub struct StoppingGeneration {
    index: u32,
    threshold: f64,
    words: Vec<Word>,
}

impl StoppingGeneration {
    /// The generation index `n`.
    #[must_use]
    pub fn index(&self) -> u32 {
        self.index
    }

    /// The mass threshold `c^n` used for the cut.
    #[must_use]
    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// Member words in lexicographic order.
    #[must_use]
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The cardinality `R_n`.
    #[must_use]
    pub fn cardinality(&self) -> usize {
        self.words.len()
    }

    /// Consumes the generation, yielding the words in lexicographic order.
    #[must_use]
    pub fn into_words(self) -> Vec<Word> {
        self.words
    }
}

/// Enumerates the stopping generation with the default cap of
/// [`DEFAULT_GENERATION_CAP`] words.
pub fn stopping_generation(m: &SymbolicMeasure, n: u32) -> Result<StoppingGeneration> {
    stopping_generation_capped(m, n, DEFAULT_GENERATION_CAP)
}

/// Enumerates the stopping generation by depth-first descent of the cylinder
/// tree, collecting each word at the first depth where its mass is `<= c^n`.
///
/// Ties (`mass == c^n` exactly) stop at that depth, matching the asymmetric
/// comparison in the definition. The threshold and all masses are computed by
/// sequential products in digit order, so for uniform measures every word of
/// length `n` compares equal to the threshold bit for bit and the result is
/// exactly the full generation of length-`n` words.
///
/// # Errors
///
/// Rejects `n == 0` and aborts with [`SymbolicError::GenerationCap`] when the
/// enumeration would exceed `cap` words.
pub fn stopping_generation_capped(
    m: &SymbolicMeasure,
    n: u32,
    cap: usize,
) -> Result<StoppingGeneration> {
    if n == 0 {
        return Err(SymbolicError::ZeroGenerationIndex { index: n });
    }
    let c = m.slow_decay_constant();
    let threshold = sequential_power(c, n);
    let l = m.alphabet_size();

    let mut words = Vec::new();
    // Stack of (word, mass); children pushed in reverse digit order so the
    // smallest digit is expanded first and output stays lexicographic.
    let mut stack: Vec<(Word, f64)> = vec![(Word::empty(), 1.0)];
    while let Some((word, mass)) = stack.pop() {
        if mass <= threshold {
            if words.len() >= cap {
                return Err(SymbolicError::GenerationCap {
                    cap,
                    estimate: sequential_power(c, n + 1).recip(),
                });
            }
            words.push(word);
            continue;
        }
        for digit in (1..=l).rev() {
            let mut child = word.clone();
            child.push(digit);
            stack.push((child, mass * m.digit_probability(digit)));
        }
    }

    Ok(StoppingGeneration {
        index: n,
        threshold,
        words,
    })
}

/// `base^n` by sequential multiplication, matching the rounding of a
/// depth-`n` cylinder-mass product.
fn sequential_power(base: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..n {
        acc *= base;
    }
    acc
}
