use std::fmt;

use crate::{Result, SymbolicError};

/// A finite word over the alphabet `{1, ..., l}`.
///
/// The empty word is permitted and denotes the identity cylinder. Digits are
/// stored 1-based, so `Word::digits()` never contains 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    digits: Vec<u8>,
}

impl Word {
    /// The empty word.
    #[must_use]
    pub fn empty() -> Self {
        Word { digits: Vec::new() }
    }

    /// Builds a word, checking every digit against the alphabet size.
    ///
    /// # Errors
    ///
    /// Returns [`SymbolicError::DigitOutOfRange`] if any digit is 0 or
    /// exceeds `alphabet`.
    pub fn new(digits: Vec<u8>, alphabet: u8) -> Result<Self> {
        for &d in &digits {
            if d == 0 || d > alphabet {
                return Err(SymbolicError::DigitOutOfRange { digit: d, alphabet });
            }
        }
        Ok(Word { digits })
    }

    /// Builds a word without validation. Callers must guarantee digits are
    /// 1-based and within the alphabet.
    #[must_use]
    pub fn from_digits_unchecked(digits: Vec<u8>) -> Self {
        Word { digits }
    }

    /// Parses a word from a string of single-digit symbols, e.g. `"213"`.
    /// Alphabets larger than 9 are not representable in this form.
    pub fn parse(s: &str, alphabet: u8) -> Result<Self> {
        let mut digits = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c.to_digit(10).unwrap_or(0) as u8;
            if d == 0 || d > alphabet {
                return Err(SymbolicError::DigitOutOfRange { digit: d, alphabet });
            }
            digits.push(d);
        }
        Ok(Word { digits })
    }

    #[must_use]
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The word with the last digit removed, or `None` for the empty word.
    #[must_use]
    pub fn parent(&self) -> Option<Word> {
        if self.digits.is_empty() {
            None
        } else {
            Some(Word {
                digits: self.digits[..self.digits.len() - 1].to_vec(),
            })
        }
    }

    /// Appends a digit in place. The digit is not validated.
    pub fn push(&mut self, digit: u8) {
        self.digits.push(digit);
    }

    /// Concatenation `self` followed by `other`.
    #[must_use]
    pub fn concat(&self, other: &Word) -> Word {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        Word { digits }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "()");
        }
        for &d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
