use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::{Brick, ParseError, Point};

/// A numbered pattern: a partition of the Cantor cube `C^n` into bricks,
/// with the brick at index `i` carrying number `i`.
///
/// Patterns arise from the whole cube by iterated half-splits, but validity
/// is checked structurally: the bricks must be pairwise disjoint and their
/// measures must sum to exactly 1 (computed in exact dyadic arithmetic, so
/// the check never suffers rounding).
///
/// Textual form: the bricks joined by `|` in number order, e.g.
/// `"0,e|10,e|11,e"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    bricks: Vec<Brick>,
}

/// Why a brick list fails to be a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternError {
    Empty,
    MixedDims,
    Overlap(usize, usize),
    MeasureSum,
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::Empty => write!(f, "pattern has no bricks"),
            PatternError::MixedDims => write!(f, "bricks have differing dimensions"),
            PatternError::Overlap(i, j) => write!(f, "bricks {i} and {j} overlap"),
            PatternError::MeasureSum => write!(f, "brick measures do not sum to 1"),
        }
    }
}

impl std::error::Error for PatternError {}

impl Pattern {
    /// The trivial pattern: the whole cube as a single brick numbered 0.
    pub fn trivial(dim: usize) -> Pattern {
        Pattern { bricks: vec![Brick::whole(dim)] }
    }

    /// Wraps a brick list after checking it partitions the cube.
    pub fn new(bricks: Vec<Brick>) -> Result<Pattern, PatternError> {
        let p = Pattern { bricks };
        p.validate()?;
        Ok(p)
    }

    /// Wraps a brick list that is known to partition the cube (e.g. built by
    /// splitting); debug builds still verify.
    pub fn from_partition(bricks: Vec<Brick>) -> Pattern {
        let p = Pattern { bricks };
        debug_assert_eq!(p.validate(), Ok(()));
        p
    }

    pub fn dim(&self) -> usize {
        self.bricks[0].dim()
    }

    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn brick(&self, i: usize) -> &Brick {
        &self.bricks[i]
    }

    pub fn bricks(&self) -> &[Brick] {
        &self.bricks
    }

    /// Checks the partition property: pairwise disjoint bricks of equal
    /// dimension whose dyadic measures sum to exactly 1.
    pub fn validate(&self) -> Result<(), PatternError> {
        if self.bricks.is_empty() {
            return Err(PatternError::Empty);
        }
        let dim = self.bricks[0].dim();
        if self.bricks.iter().any(|b| b.dim() != dim) {
            return Err(PatternError::MixedDims);
        }
        for i in 0..self.bricks.len() {
            for j in i + 1..self.bricks.len() {
                if self.bricks[i].overlaps(&self.bricks[j]) {
                    return Err(PatternError::Overlap(i, j));
                }
            }
        }
        // Σ 2^(-len_i) = 1  ⟺  Σ 2^(max-len_i) = 2^max, exactly.
        let max = self.bricks.iter().map(Brick::total_len).max().unwrap();
        let sum: BigUint = self
            .bricks
            .iter()
            .map(|b| BigUint::from(1u8) << (max - b.total_len()))
            .sum();
        if sum != BigUint::from(1u8) << max {
            return Err(PatternError::MeasureSum);
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Splits brick `i` along `axis`; the `0` child keeps index `i`, the `1`
    /// child is inserted at `i + 1`, and later bricks shift up by one.
    pub fn split(&self, i: usize, axis: usize) -> Pattern {
        let (low, high) = self.bricks[i].split(axis);
        let mut bricks = self.bricks.clone();
        bricks[i] = low;
        bricks.insert(i + 1, high);
        Pattern { bricks }
    }

    /// Index of the unique brick containing `x`.
    pub fn brick_containing(&self, x: &Point) -> usize {
        self.bricks
            .iter()
            .position(|b| x.starts_with(b))
            .expect("a valid pattern covers every point")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.bricks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for Pattern {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Pattern, ParseError> {
        let bricks: Result<Vec<Brick>, ParseError> = s.split('|').map(str::parse).collect();
        let p = Pattern { bricks: bricks? };
        p.validate().map_err(|e| ParseError::new(format!("invalid pattern: {e}")))?;
        Ok(p)
    }
}
