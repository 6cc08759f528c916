use symbolic::Word;

use crate::system::PhiTSystem;
use crate::{PhitError, Result};

/// Largest level for which the full `4^n` image list is materialized.
/// Beyond this, gap and separation questions use the continued-fraction
/// closed forms instead of enumeration.
pub const ENUMERATION_CAP: u32 = 12;

/// Word lengths above this would overflow the `u64` coordinates.
const COORD_BITS: u32 = 63;

/// A depth-`n` image of the origin, stored by its integer coordinates:
/// the point is `(p + q t) / 2^n` with `0 <= p, q <= 2^n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactPoint {
    pub n: u32,
    pub p: u64,
    pub q: u64,
}

impl ExactPoint {
    /// Double-precision value of the image point.
    pub fn value_f64(&self, sys: &PhiTSystem) -> f64 {
        sys.value_f64(self.p, self.q, self.n)
    }
}

/// Coordinates of the image of the origin under the word `a`: reading
/// symbols left to right (outermost map first), symbol `1 + b + 2c`
/// appends bit `b` to `p` and bit `c` to `q`.
pub fn word_to_pair(word: &Word) -> Result<(u64, u64)> {
    let n = word.len() as u32;
    if n > COORD_BITS {
        return Err(PhitError::LevelCap { n, cap: COORD_BITS });
    }
    let mut p = 0u64;
    let mut q = 0u64;
    for &digit in word.digits() {
        if !(1..=4).contains(&digit) {
            return Err(PhitError::Ifs(ifs_engine::IfsError::SymbolOutOfRange {
                symbol: digit,
                alphabet: 4,
            }));
        }
        let d = u64::from(digit - 1);
        p = (p << 1) | (d & 1);
        q = (q << 1) | (d >> 1);
    }
    Ok((p, q))
}

/// Inverse of [`word_to_pair`]: rebuilds the unique depth-`n` word whose
/// image has coordinates `(p, q)`.
pub fn pair_to_word(p: u64, q: u64, n: u32) -> Result<Word> {
    if n == 0 {
        return Err(PhitError::ZeroLevel);
    }
    if n > COORD_BITS {
        return Err(PhitError::LevelCap { n, cap: COORD_BITS });
    }
    let top = 1u64 << n;
    debug_assert!(p < top && q < top);
    let mut digits = Vec::with_capacity(n as usize);
    for j in (0..n).rev() {
        let b = (p >> j) & 1;
        let c = (q >> j) & 1;
        digits.push(1 + (b + 2 * c) as u8);
    }
    Ok(Word::new(digits, 4)?)
}

/// All `4^n` depth-`n` images of the origin, one per coordinate pair,
/// ordered lexicographically by `(p, q)`. Distinct pairs may share a
/// value when `t` is rational; the list never repeats a pair.
pub fn images_exact(sys: &PhiTSystem, n: u32) -> Result<Vec<ExactPoint>> {
    let _ = sys;
    if n == 0 {
        return Err(PhitError::ZeroLevel);
    }
    if n > ENUMERATION_CAP {
        return Err(PhitError::LevelCap { n, cap: ENUMERATION_CAP });
    }
    let side = 1u64 << n;
    let mut points = Vec::with_capacity((side * side) as usize);
    for p in 0..side {
        for q in 0..side {
            points.push(ExactPoint { n, p, q });
        }
    }
    Ok(points)
}
