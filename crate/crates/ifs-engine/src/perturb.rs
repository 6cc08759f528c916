use nalgebra::DVector;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use symbolic::Word;

use crate::{AffineIfs, IfsError, Result, Similarity1D};

const FNV_OFFSET: u128 = 0x6c62272e07bb014262b821756295c58d;
const FNV_PRIME: u128 = 0x0000000001000000000000000000013B;

/// Deterministic per-word perturbation errors: every finite word gets an
/// i.i.d.-style error vector drawn uniformly from the closed `rho`-ball,
/// realized as a pure function of `(seed, word)` so the infinite family
/// never needs storing.
#[derive(Clone, Copy, Debug)]
pub struct PerturbationScheme {
    rho: f64,
    seed: u64,
}

impl PerturbationScheme {
    /// # Errors
    ///
    /// Rejects negative or non-finite radii.
    pub fn new(rho: f64, seed: u64) -> Result<Self> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(IfsError::BadRadius { rho });
        }
        Ok(PerturbationScheme { rho, seed })
    }

    #[must_use]
    pub fn rho(&self) -> f64 {
        self.rho
    }

    #[must_use]
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The error vector assigned to `word`, uniform in the `rho`-ball.
    /// Identical `(seed, word, dim)` always yields identical output.
    #[must_use]
    pub fn error_vector(&self, word: &Word, dim: usize) -> Vec<f64> {
        let mut hash = FNV_OFFSET;
        for &digit in word.digits() {
            hash = fnv_step(hash, digit);
        }
        self.error_from_hash(word.len(), hash, dim)
    }

    /// As [`Self::error_vector`] with the word identified by its length and
    /// running digest, enabling incremental prefix evaluation.
    fn error_from_hash(&self, len: usize, hash: u128, dim: usize) -> Vec<f64> {
        if self.rho == 0.0 {
            return vec![0.0; dim];
        }
        let mut key = [0u8; 32];
        key[0..8].copy_from_slice(&self.seed.to_le_bytes());
        key[8..16].copy_from_slice(&(len as u64).to_le_bytes());
        key[16..32].copy_from_slice(&hash.to_le_bytes());
        let mut rng = ChaCha20Rng::from_seed(key);
        // Rejection sampling from the unit ball; acceptance probability is
        // at least 0.52 for dim <= 3.
        loop {
            let draw: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
            let norm2: f64 = draw.iter().map(|x| x * x).sum();
            if norm2 <= 1.0 {
                return draw.into_iter().map(|x| x * self.rho).collect();
            }
        }
    }
}

fn fnv_step(hash: u128, byte: u8) -> u128 {
    (hash ^ u128::from(byte)).wrapping_mul(FNV_PRIME)
}

/// Symbol sequence of length `depth`: the base word followed by the tail
/// repeated, plus the running prefix digests needed for error lookup.
fn truncated_symbols(a: &Word, tail: &Word, depth: usize) -> Result<(Vec<u8>, Vec<u128>)> {
    if depth < a.len() {
        return Err(IfsError::DepthBelowWord {
            depth,
            word_len: a.len(),
        });
    }
    if depth > a.len() && tail.is_empty() {
        return Err(IfsError::EmptyTail);
    }
    let mut symbols = Vec::with_capacity(depth);
    symbols.extend_from_slice(a.digits());
    let mut i = 0usize;
    while symbols.len() < depth {
        symbols.push(tail.digits()[i % tail.len()]);
        i += 1;
    }
    let mut hashes = Vec::with_capacity(depth);
    let mut hash = FNV_OFFSET;
    for &s in &symbols {
        hash = fnv_step(hash, s);
        hashes.push(hash);
    }
    Ok((symbols, hashes))
}

/// Evaluates the perturbed projection of the word `a` extended by the
/// repeated `tail`, truncated at `depth` symbols: innermost to outermost,
/// each map is offset by the error vector of the prefix ending at it.
///
/// With `rho = 0` this is the unperturbed truncated projection.
///
/// # Errors
///
/// Rejects `depth < |a|`, an empty tail when `depth > |a|`, and words with
/// out-of-range symbols.
pub fn perturbed_point(
    ifs: &Similarity1D,
    scheme: &PerturbationScheme,
    a: &Word,
    tail: &Word,
    depth: usize,
) -> Result<f64> {
    let (symbols, hashes) = truncated_symbols(a, tail, depth)?;
    let mut x = 0.0f64;
    for j in (0..depth).rev() {
        let map = ifs.map(symbols[j])?;
        let y = scheme.error_from_hash(j + 1, hashes[j], 1)[0];
        x = map.scale * x + map.trans + y;
    }
    Ok(x)
}

/// As [`perturbed_point`] for affine systems.
///
/// # Errors
///
/// As [`perturbed_point`].
pub fn perturbed_point_nd(
    ifs: &AffineIfs,
    scheme: &PerturbationScheme,
    a: &Word,
    tail: &Word,
    depth: usize,
) -> Result<DVector<f64>> {
    let (symbols, hashes) = truncated_symbols(a, tail, depth)?;
    let dim = ifs.dim();
    let mut x = DVector::zeros(dim);
    for j in (0..depth).rev() {
        let map = ifs.map(symbols[j])?;
        let y = DVector::from_vec(scheme.error_from_hash(j + 1, hashes[j], dim));
        x = &map.matrix * x + &map.trans + y;
    }
    Ok(x)
}

/// Bound on the change of the truncated perturbed projection when the
/// truncation depth increases by one: the new innermost contribution is at
/// most `offset_max + rho` and passes through `depth` contractions.
#[must_use]
pub fn truncation_bound(scale_max: f64, offset_max: f64, rho: f64, depth: usize) -> f64 {
    scale_max.powi(depth as i32) * (offset_max + rho)
}
