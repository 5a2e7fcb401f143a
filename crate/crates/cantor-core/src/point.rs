use std::fmt;
use std::str::FromStr;

use crate::{Brick, ParseError, Word};

/// One coordinate of an eventually periodic Cantor point: the infinite binary
/// sequence `pre · per · per · per · …`.
///
/// Values are kept canonical — `per` is primitive (not a proper power) and
/// `pre` is the shortest preperiod — so structural equality coincides with
/// equality of the infinite sequences. Canonicalization absorbs any tail of
/// `pre` that matches the periodic part: while the last bit of `pre` equals
/// the last bit of `per`, that bit moves into the period by rotating `per`.
///
/// Textual form: `pre(per)` with an empty `pre` omitted, e.g. `"01(10)"` or
/// `"(0)"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointCoord {
    pre: Word,
    per: Word,
}

impl PointCoord {
    /// Builds the sequence `pre · per^∞` and canonicalizes. `per` must be
    /// nonempty.
    pub fn new(pre: Word, per: Word) -> PointCoord {
        assert!(!per.is_empty(), "period must be nonempty");
        let mut per = per.primitive_root();
        let mut pre = pre;
        while let Some(last) = pre.last() {
            if per.last() == Some(last) {
                pre = pre.parent().unwrap();
                per = per.rotate_right();
            } else {
                break;
            }
        }
        PointCoord { pre, per }
    }

    /// The constant sequence `bit^∞`.
    pub fn constant(bit: u8) -> PointCoord {
        PointCoord::new(Word::empty(), Word::from_bits([bit]))
    }

    pub fn pre(&self) -> &Word {
        &self.pre
    }

    pub fn per(&self) -> &Word {
        &self.per
    }

    /// The i-th bit of the infinite sequence.
    pub fn bit(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre.bit(i)
        } else {
            self.per.bit((i - self.pre.len()) % self.per.len())
        }
    }

    /// True iff the infinite sequence begins with the finite word `w`.
    pub fn matches_prefix(&self, w: &Word) -> bool {
        (0..w.len()).all(|i| self.bit(i) == w.bit(i))
    }

    /// Drops the first `|w|` bits; `None` unless the sequence starts with `w`.
    pub fn strip_prefix(&self, w: &Word) -> Option<PointCoord> {
        if !self.matches_prefix(w) {
            return None;
        }
        if w.len() < self.pre.len() {
            let pre = Word::from_bits(self.pre.bits()[w.len()..].iter().copied());
            Some(PointCoord::new(pre, self.per.clone()))
        } else {
            let per = self.per.rotate_left_by(w.len() - self.pre.len());
            Some(PointCoord::new(Word::empty(), per))
        }
    }

    /// Prepends the finite word `w` to the sequence.
    pub fn prepend(&self, w: &Word) -> PointCoord {
        PointCoord::new(w.concat(&self.pre), self.per.clone())
    }
}

impl fmt::Display for PointCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.pre.is_empty() {
            write!(f, "{}", self.pre)?;
        }
        write!(f, "({})", self.per)
    }
}

impl fmt::Debug for PointCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PointCoord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<PointCoord, ParseError> {
        let open = s
            .find('(')
            .ok_or_else(|| ParseError::new("point coordinate needs a (period)"))?;
        if !s.ends_with(')') {
            return Err(ParseError::new("unterminated (period)"));
        }
        let pre = if open == 0 { Word::empty() } else { s[..open].parse()? };
        let per: Word = s[open + 1..s.len() - 1].parse()?;
        if per.is_empty() {
            return Err(ParseError::new("period must be nonempty"));
        }
        Ok(PointCoord::new(pre, per))
    }
}

/// An eventually periodic point of the Cantor cube `C^n`: one eventually
/// periodic binary sequence per coordinate. These are exactly the points on
/// which prefix-replacement maps can be iterated exactly.
///
/// Textual form: coordinates joined by `;`, e.g. `"01(10);(0)"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<PointCoord>,
}

impl Point {
    pub fn new(coords: Vec<PointCoord>) -> Point {
        assert!(!coords.is_empty(), "points need at least one coordinate");
        Point { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, axis: usize) -> &PointCoord {
        &self.coords[axis]
    }

    pub fn coords(&self) -> &[PointCoord] {
        &self.coords
    }

    /// True iff the point lies in `brick`.
    pub fn starts_with(&self, brick: &Brick) -> bool {
        self.dim() == brick.dim()
            && self
                .coords
                .iter()
                .zip(brick.words())
                .all(|(c, w)| c.matches_prefix(w))
    }

    /// Coordinatewise prefix removal; `None` unless the point lies in `brick`.
    pub fn strip_brick(&self, brick: &Brick) -> Option<Point> {
        if !self.starts_with(brick) {
            return None;
        }
        Some(Point {
            coords: self
                .coords
                .iter()
                .zip(brick.words())
                .map(|(c, w)| c.strip_prefix(w).unwrap())
                .collect(),
        })
    }

    /// Coordinatewise prepend of `brick`'s words.
    pub fn prepend_brick(&self, brick: &Brick) -> Point {
        assert_eq!(self.dim(), brick.dim());
        Point {
            coords: self
                .coords
                .iter()
                .zip(brick.words())
                .map(|(c, w)| c.prepend(w))
                .collect(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Point {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Point, ParseError> {
        let coords: Result<Vec<PointCoord>, ParseError> = s.split(';').map(str::parse).collect();
        let coords = coords?;
        if coords.is_empty() {
            return Err(ParseError::new("point needs at least one coordinate"));
        }
        Ok(Point { coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pc(s: &str) -> PointCoord {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalization_absorbs_preperiod_into_period() {
        // 0 10 10 10 … = (01)^∞.
        assert_eq!(pc("0(10)"), pc("(01)"));
        assert_eq!(pc("0(10)").to_string(), "(01)");
        // 01 (1) = 0 (1).
        assert_eq!(pc("01(1)"), pc("0(1)"));
        // Period reduced to its primitive root.
        assert_eq!(pc("(0101)"), pc("(01)"));
    }

    #[test]
    fn distinct_rotations_of_a_period_are_distinct_points() {
        assert_ne!(pc("(01)"), pc("(10)"));
    }

    #[test]
    fn bit_indexing_crosses_into_the_period() {
        let x = pc("001(10)");
        let expect = [0, 0, 1, 1, 0, 1, 0, 1, 0];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(x.bit(i), *e, "bit {i}");
        }
    }

    #[test]
    fn strip_prefix_rejects_mismatch_and_shifts_bits() {
        let x = pc("01(100)");
        assert!(x.strip_prefix(&"00".parse().unwrap()).is_none());
        let s = x.strip_prefix(&"011".parse().unwrap()).unwrap();
        // Oracle: stripping w shifts the bit index by |w|.
        for i in 0..32 {
            assert_eq!(s.bit(i), x.bit(i + 3));
        }
    }

    #[test]
    fn prepend_then_strip_is_identity() {
        let x = pc("01(100)");
        let w: Word = "1101".parse().unwrap();
        assert_eq!(x.prepend(&w).strip_prefix(&w), Some(x));
    }

    #[test]
    fn point_brick_membership_is_per_coordinate() {
        let x: Point = "01(10);(0)".parse().unwrap();
        assert!(x.starts_with(&"01,00".parse().unwrap()));
        assert!(!x.starts_with(&"01,01".parse().unwrap()));
        assert_eq!(x.to_string(), "01(10);(0)");
    }

    proptest! {
        // Oracle: any expansion of a canonical coordinate re-canonicalizes
        // to the same value.
        #[test]
        fn expansion_recanonicalizes(
            pre_bits in proptest::collection::vec(0u8..2, 0..5),
            per_bits in proptest::collection::vec(0u8..2, 1..6),
            extra in 0usize..64,
        ) {
            let x = PointCoord::new(Word::from_bits(pre_bits), Word::from_bits(per_bits));
            let target = x.pre().len() + extra;
            let pre = Word::from_bits((0..target).map(|i| x.bit(i)));
            let per = x.per().rotate_left_by((target - x.pre().len()) % x.per().len());
            prop_assert_eq!(PointCoord::new(pre, per), x);
        }

        #[test]
        fn strip_shifts_indices(
            pre_bits in proptest::collection::vec(0u8..2, 0..5),
            per_bits in proptest::collection::vec(0u8..2, 1..6),
            take in 0usize..10,
        ) {
            let x = PointCoord::new(Word::from_bits(pre_bits), Word::from_bits(per_bits));
            let w = Word::from_bits((0..take).map(|i| x.bit(i)));
            let s = x.strip_prefix(&w).unwrap();
            for i in 0..24 {
                prop_assert_eq!(s.bit(i), x.bit(i + take));
            }
        }
    }
}
