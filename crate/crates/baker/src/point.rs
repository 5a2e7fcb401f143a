//! Bi-infinite eventually periodic binary sequences with a binary point.
//!
//! A [`TwoSidedPoint`] denotes a function `x: Z -> {0,1}` of the form
//! `... λ λ a . b ρ ρ ...` — the left period `λ` repeats towards `-∞`, the
//! finite blocks `a` and `b` sit on either side of the binary point (which
//! lies between indices `-1` and `0`), and the right period `ρ` repeats
//! towards `+∞`.  Points are kept canonical: both periods primitive, both
//! preperiods minimal.  The textual form is `(λ)a.b(ρ)` with empty `a` or
//! `b` written `e`.

use cantor_core::{ParseError, Point, PointCoord, Word};
use rand::Rng;
use std::fmt;
use std::str::FromStr;

/// Why a two-sided point cannot be built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BakerError {
    EmptyPeriod,
    Dimension(usize),
}

impl fmt::Display for BakerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BakerError::EmptyPeriod => write!(f, "period words must be nonempty"),
            BakerError::Dimension(d) => {
                write!(f, "two-sided points correspond to dimension-2 points, got dimension {d}")
            }
        }
    }
}

impl std::error::Error for BakerError {}

/// A canonical bi-infinite eventually periodic sequence `^∞λ a . b ρ^∞`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoSidedPoint {
    left_period: Word,
    left_pre: Word,
    right_pre: Word,
    right_period: Word,
}

impl TwoSidedPoint {
    /// Builds the sequence `^∞λ a . b ρ^∞` and canonicalizes it.  The period
    /// words must be nonempty.
    pub fn new(
        left_period: Word,
        left_pre: Word,
        right_pre: Word,
        right_period: Word,
    ) -> Result<TwoSidedPoint, BakerError> {
        if left_period.is_empty() || right_period.is_empty() {
            return Err(BakerError::EmptyPeriod);
        }
        // Canonicalize each side through the one-sided machinery: the right
        // side directly, the left side through reversal (reading the left
        // tail outward from the binary point).
        let right = PointCoord::new(right_pre, right_period);
        let left = PointCoord::new(left_pre.reversed(), left_period.reversed());
        Ok(TwoSidedPoint {
            left_period: left.per().reversed(),
            left_pre: left.pre().reversed(),
            right_pre: right.pre().clone(),
            right_period: right.per().clone(),
        })
    }

    /// The globally `w`-periodic sequence `^∞w . w^∞` (canonicalized, so the
    /// stored period is the primitive root of `w`).
    pub fn periodic(w: &Word) -> Result<TwoSidedPoint, BakerError> {
        TwoSidedPoint::new(w.clone(), Word::empty(), Word::empty(), w.clone())
    }

    /// The constant sequence of the given bit.
    pub fn constant(bit: u8) -> TwoSidedPoint {
        let w = Word::from_bits([bit]);
        TwoSidedPoint::periodic(&w).expect("single letters are nonempty")
    }

    pub fn left_period(&self) -> &Word {
        &self.left_period
    }

    pub fn left_pre(&self) -> &Word {
        &self.left_pre
    }

    pub fn right_pre(&self) -> &Word {
        &self.right_pre
    }

    pub fn right_period(&self) -> &Word {
        &self.right_period
    }

    /// Shifts indices down by one (`y_i = x_{i+1}`): the bit at index 0
    /// crosses the binary point to the left side.
    pub fn shift(&self) -> TwoSidedPoint {
        let mut a = self.left_pre.clone();
        let mut b = self.right_pre.clone();
        if b.is_empty() {
            b = self.right_period.clone();
        }
        let crossing = b.bit(0);
        a.push(crossing);
        let b_rest = Word::from_bits(b.bits()[1..].iter().copied());
        TwoSidedPoint::new(self.left_period.clone(), a, b_rest, self.right_period.clone())
            .expect("periods are preserved")
    }

    /// The two-coordinate point with coordinate 0 the forward tail
    /// `x_0 x_1 ...` and coordinate 1 the backward tail `x_{-1} x_{-2} ...`.
    pub fn to_point(&self) -> Point {
        Point::new(vec![
            PointCoord::new(self.right_pre.clone(), self.right_period.clone()),
            PointCoord::new(self.left_pre.reversed(), self.left_period.reversed()),
        ])
    }

    /// Reads a two-sided sequence back off a dimension-2 point.
    pub fn from_point(p: &Point) -> Result<TwoSidedPoint, BakerError> {
        if p.dim() != 2 {
            return Err(BakerError::Dimension(p.dim()));
        }
        let fwd = p.coord(0);
        let back = p.coord(1);
        TwoSidedPoint::new(
            back.per().reversed(),
            back.pre().reversed(),
            fwd.pre().clone(),
            fwd.per().clone(),
        )
    }

    /// Is the sequence globally periodic (no preperiod on either side, and
    /// the two periods aligned across the binary point)?
    pub fn is_purely_periodic(&self) -> bool {
        self.left_pre.is_empty()
            && self.right_pre.is_empty()
            && self.left_period == self.right_period
    }

    /// The size of the shift orbit: the primitive period for purely periodic
    /// sequences, `None` (an infinite orbit) otherwise.
    pub fn orbit_size(&self) -> Option<usize> {
        self.is_purely_periodic().then(|| self.right_period.len())
    }
}

fn block(w: &Word) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_string()
    }
}

impl fmt::Display for TwoSidedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}){}.{}({})",
            self.left_period,
            block(&self.left_pre),
            block(&self.right_pre),
            self.right_period
        )
    }
}

impl FromStr for TwoSidedPoint {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<TwoSidedPoint, ParseError> {
        let (ls, rs) = s
            .split_once('.')
            .ok_or_else(|| ParseError::new("expected a '.' between the two sides"))?;
        let ls = ls
            .strip_prefix('(')
            .ok_or_else(|| ParseError::new("left side must start with '(λ)'"))?;
        let (lper, lpre) = ls
            .split_once(')')
            .ok_or_else(|| ParseError::new("unclosed left period"))?;
        let rs = rs
            .strip_suffix(')')
            .ok_or_else(|| ParseError::new("right side must end with '(ρ)'"))?;
        let (rpre, rper) = rs
            .rsplit_once('(')
            .ok_or_else(|| ParseError::new("unopened right period"))?;
        let word = |tok: &str| -> Result<Word, ParseError> { tok.parse() };
        TwoSidedPoint::new(word(lper)?, word(lpre)?, word(rpre)?, word(rper)?)
            .map_err(|e| ParseError::new(e.to_string()))
    }
}

/// A random two-sided point with small period and preperiod blocks, for
/// randomized corpora.
pub fn random_two_sided(rng: &mut impl Rng) -> TwoSidedPoint {
    let mut word = |lo: usize, hi: usize| {
        let len = rng.random_range(lo..=hi);
        Word::from_bits((0..len).map(|_| rng.random_range(0..2u8)))
    };
    let lam = word(1, 4);
    let a = word(0, 3);
    let b = word(0, 3);
    let rho = word(1, 4);
    TwoSidedPoint::new(lam, a, b, rho).expect("periods chosen nonempty")
}
