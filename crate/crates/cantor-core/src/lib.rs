//! Exact combinatorics of Cantor cubes: finite binary words, bricks
//! (products of prefix cylinders), numbered patterns (brick partitions built
//! from half-splits), and eventually periodic points.
//!
//! Everything here is exact — measures are dyadic rationals handled in
//! integer arithmetic and points are preperiodic sequences — so the group
//! computations layered on top decide equalities, never approximate them.

mod brick;
mod guillotine;
mod pattern;
mod point;
mod rng;
mod word;

pub use brick::Brick;
pub use guillotine::{guillotine_decompose, SplitTree};
pub use pattern::{Pattern, PatternError};
pub use point::{Point, PointCoord};
pub use rng::{corpus_rng, DEFAULT_SEED};
pub use word::Word;

use std::fmt;

/// Error for any of the textual formats in this workspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> ParseError {
        ParseError { msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.msg)
    }
}

impl std::error::Error for ParseError {}
