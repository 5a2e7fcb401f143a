use std::fmt;
use std::str::FromStr;

use crate::{ParseError, Word};

/// An n-dimensional brick: the clopen subset of the Cantor cube `C^n` whose
/// points extend a fixed binary prefix in every coordinate.
///
/// The whole cube is the brick with all prefixes empty. Splitting along axis
/// `a` halves the brick by appending `0` (lower half) or `1` (upper half) to
/// the axis-`a` word. A brick's measure is `2^(-Σ len(wⱼ))` under the uniform
/// product measure, so measures of any partition sum to exactly 1.
///
/// Textual form: the coordinate words joined by commas, e.g. `"01,e"` in
/// dimension 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Brick {
    words: Vec<Word>,
}

impl Brick {
    /// The whole cube of dimension `dim` (every coordinate word empty).
    pub fn whole(dim: usize) -> Brick {
        assert!(dim >= 1, "bricks need at least one coordinate");
        Brick { words: vec![Word::empty(); dim] }
    }

    pub fn new(words: Vec<Word>) -> Brick {
        assert!(!words.is_empty(), "bricks need at least one coordinate");
        Brick { words }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn word(&self, axis: usize) -> &Word {
        &self.words[axis]
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Total prefix length over all coordinates; the brick's measure is
    /// `2^(-total_len())`.
    pub fn total_len(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    /// True iff every point of the whole cube with the given coordinate
    /// prefixes lies in this brick, i.e. each of `self`'s words is a prefix
    /// of the corresponding word of `other`.
    pub fn contains(&self, other: &Brick) -> bool {
        self.dim() == other.dim()
            && self.words.iter().zip(&other.words).all(|(s, o)| s.is_prefix_of(o))
    }

    /// True iff the two bricks share a point. For prefix bricks this happens
    /// exactly when in every coordinate one word is a prefix of the other.
    pub fn overlaps(&self, other: &Brick) -> bool {
        self.dim() == other.dim()
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(s, o)| s.is_prefix_of(o) || o.is_prefix_of(s))
    }

    /// The two halves produced by splitting along `axis`; the `0` child
    /// (lower/left half) comes first.
    pub fn split(&self, axis: usize) -> (Brick, Brick) {
        let mut low = self.clone();
        let mut high = self.clone();
        low.words[axis].push(0);
        high.words[axis].push(1);
        (low, high)
    }

    /// The brick with the last bit of the axis-`a` word removed: the parent
    /// from which this brick was split along that axis. `None` if the axis
    /// word is empty.
    pub fn parent_along(&self, axis: usize) -> Option<Brick> {
        let parent = self.words[axis].parent()?;
        let mut b = self.clone();
        b.words[axis] = parent;
        Some(b)
    }

    /// The brick with the last bit of the axis-`a` word flipped: the other
    /// half of the same split. `None` if the axis word is empty.
    pub fn sibling_along(&self, axis: usize) -> Option<Brick> {
        let sibling = self.words[axis].sibling()?;
        let mut b = self.clone();
        b.words[axis] = sibling;
        Some(b)
    }

    /// Replaces the axis-`a` words by `f(word)` coordinatewise.
    pub fn map_words(&self, mut f: impl FnMut(usize, &Word) -> Word) -> Brick {
        Brick {
            words: self.words.iter().enumerate().map(|(a, w)| f(a, w)).collect(),
        }
    }

    /// Interprets `self` as an address relative to `base`: prepends `base`'s
    /// word to `self`'s word in every coordinate.
    pub fn prefixed_by(&self, base: &Brick) -> Brick {
        assert_eq!(self.dim(), base.dim());
        self.map_words(|a, w| base.words[a].concat(w))
    }

    /// Removes `base`'s words from the front coordinatewise; `None` unless
    /// `base` contains `self`.
    pub fn relative_to(&self, base: &Brick) -> Option<Brick> {
        if !base.contains(self) {
            return None;
        }
        Some(self.map_words(|a, w| w.strip_prefix(&base.words[a]).unwrap()))
    }

    /// Coordinatewise intersection of two overlapping bricks: in each
    /// coordinate the longer of the two words. `None` if disjoint.
    pub fn intersection(&self, other: &Brick) -> Option<Brick> {
        if !self.overlaps(other) {
            return None;
        }
        Some(self.map_words(|a, w| {
            let o = &other.words[a];
            if w.len() >= o.len() {
                w.clone()
            } else {
                o.clone()
            }
        }))
    }
}

impl fmt::Display for Brick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Brick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Brick {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Brick, ParseError> {
        let words: Result<Vec<Word>, ParseError> = s.split(',').map(str::parse).collect();
        let words = words?;
        if words.is_empty() {
            return Err(ParseError::new("brick needs at least one coordinate"));
        }
        Ok(Brick { words })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Brick {
        s.parse().unwrap()
    }

    #[test]
    fn split_children_partition_the_parent() {
        let (low, high) = b("01,1").split(0);
        assert_eq!(low, b("010,1"));
        assert_eq!(high, b("011,1"));
        assert!(b("01,1").contains(&low) && b("01,1").contains(&high));
        assert!(!low.overlaps(&high));
    }

    #[test]
    fn overlap_requires_prefix_relation_in_every_coordinate() {
        assert!(b("0,e").overlaps(&b("01,1")));
        assert!(!b("0,0").overlaps(&b("01,1")));
        assert!(!b("0,e").overlaps(&b("1,e")));
    }

    #[test]
    fn intersection_takes_longer_word_per_axis() {
        assert_eq!(b("0,e").intersection(&b("e,1")), Some(b("0,1")));
        assert_eq!(b("0,0").intersection(&b("1,0")), None);
    }

    #[test]
    fn relative_and_prefixed_invert_each_other() {
        let base = b("0,11");
        let inner = b("010,110");
        let rel = inner.relative_to(&base).unwrap();
        assert_eq!(rel, b("10,0"));
        assert_eq!(rel.prefixed_by(&base), inner);
        assert_eq!(b("1,e").relative_to(&base), None);
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["e", "0,e", "01,10", "e,e,e"] {
            assert_eq!(b(s).to_string(), s);
        }
        assert!("".parse::<Brick>().is_err());
        assert!("0,,1".parse::<Brick>().is_err());
    }
}
