use std::fmt;
use std::str::FromStr;

use crate::ParseError;

/// A finite binary word: an address prefix in one coordinate of a Cantor cube.
///
/// The empty word addresses the whole coordinate interval; appending `0`
/// selects the lower/left half of whatever the current word addresses and
/// appending `1` the upper/right half.
///
/// Words order lexicographically with `0 < 1` and a proper prefix sorting
/// before its extensions, which is the order used for all deterministic
/// tie-breaks in this workspace.
///
/// Textual form: a string of `0`/`1` characters, or `"e"` for the empty word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word { bits: Vec::new() }
    }

    /// Builds a word from anything yielding bits; values must be 0 or 1.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Word {
        let bits: Vec<u8> = bits.into_iter().collect();
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        Word { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn first(&self) -> Option<u8> {
        self.bits.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.bits.last().copied()
    }

    /// Appends one bit in place.
    pub fn push(&mut self, bit: u8) {
        assert!(bit <= 1, "bits must be 0 or 1");
        self.bits.push(bit);
    }

    /// Returns `self` with one extra bit appended.
    pub fn child(&self, bit: u8) -> Word {
        let mut w = self.clone();
        w.push(bit);
        w
    }

    /// Returns the concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Word { bits }
    }

    /// True iff `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.bits.len() >= self.bits.len() && other.bits[..self.bits.len()] == self.bits[..]
    }

    /// Removes `prefix` from the front, or `None` if it is not a prefix.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        if prefix.is_prefix_of(self) {
            Some(Word { bits: self.bits[prefix.len()..].to_vec() })
        } else {
            None
        }
    }

    /// The word without its last bit; `None` for the empty word.
    pub fn parent(&self) -> Option<Word> {
        if self.bits.is_empty() {
            None
        } else {
            Some(Word { bits: self.bits[..self.bits.len() - 1].to_vec() })
        }
    }

    /// The word differing in the last bit; `None` for the empty word.
    pub fn sibling(&self) -> Option<Word> {
        let mut w = self.clone();
        let last = w.bits.pop()?;
        w.bits.push(1 - last);
        Some(w)
    }

    /// The word read back to front.
    pub fn reversed(&self) -> Word {
        Word { bits: self.bits.iter().rev().copied().collect() }
    }

    /// Cyclic rotation moving the last bit to the front.
    pub fn rotate_right(&self) -> Word {
        let mut bits = self.bits.clone();
        if let Some(last) = bits.pop() {
            bits.insert(0, last);
        }
        Word { bits }
    }

    /// Cyclic rotation by `k` places, moving the first `k` bits to the back.
    pub fn rotate_left_by(&self, k: usize) -> Word {
        if self.bits.is_empty() {
            return self.clone();
        }
        let k = k % self.bits.len();
        let mut bits = self.bits[k..].to_vec();
        bits.extend_from_slice(&self.bits[..k]);
        Word { bits }
    }

    /// The shortest word `r` with `self = r^(len/|r|)`, i.e. the primitive
    /// root under concatenation. The empty word is its own root.
    pub fn primitive_root(&self) -> Word {
        let n = self.bits.len();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let root = &self.bits[..d];
            if self.bits.chunks(d).all(|c| c == root) {
                return Word { bits: root.to_vec() };
            }
        }
        Word::empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return write!(f, "e");
        }
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Word, ParseError> {
        if s == "e" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(ParseError::new("empty word must be written \"e\""));
        }
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(ParseError::new(format!("invalid word character {c:?}"))),
            }
        }
        Ok(Word { bits })
    }
}
