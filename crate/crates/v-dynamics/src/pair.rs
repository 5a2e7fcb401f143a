//! Tree pairs: a prefix-replacement map presented by two finite binary trees
//! and a bijection between their leaves.
//!
//! A pair `(D, R, sigma)` sends the interval below domain leaf `u` affinely
//! onto the interval below range leaf `sigma(u)` by prefix replacement.  The
//! textual form lists both leaf sets and the leaf bijection:
//!
//! ```text
//! D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11
//! ```
//!
//! with `e` standing for the empty (root) address.

use crate::tree;
use cantor_core::{Brick, ParseError, Pattern, Word};
use nv_elements::Element;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Why a triple of leaf lists and pairs fails to be a tree pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairError {
    BadTree(String),
    BadBijection(String),
    Dimension(usize),
}

impl fmt::Display for PairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairError::BadTree(msg) => write!(f, "invalid tree: {msg}"),
            PairError::BadBijection(msg) => write!(f, "invalid leaf bijection: {msg}"),
            PairError::Dimension(d) => {
                write!(f, "tree pairs describe one-dimensional maps, got dimension {d}")
            }
        }
    }
}

impl std::error::Error for PairError {}

/// A pair of finite binary trees with a bijection between their leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePair {
    d: Vec<Word>,
    r: Vec<Word>,
    sigma: BTreeMap<Word, Word>,
}

impl TreePair {
    /// Builds a pair from leaf lists and the leaf bijection, validating both
    /// trees and that `pairs` matches the two leaf sets exactly.
    pub fn new(
        d_leaves: Vec<Word>,
        r_leaves: Vec<Word>,
        pairs: Vec<(Word, Word)>,
    ) -> Result<TreePair, PairError> {
        tree::validate_leaves(&d_leaves).map_err(|e| PairError::BadTree(e.to_string()))?;
        tree::validate_leaves(&r_leaves).map_err(|e| PairError::BadTree(e.to_string()))?;
        let d = tree::sorted(d_leaves);
        let r = tree::sorted(r_leaves);
        if pairs.len() != d.len() || d.len() != r.len() {
            return Err(PairError::BadBijection(format!(
                "{} pairs for {} domain and {} range leaves",
                pairs.len(),
                d.len(),
                r.len()
            )));
        }
        let sigma: BTreeMap<Word, Word> = pairs.into_iter().collect();
        if sigma.len() != d.len() {
            return Err(PairError::BadBijection("repeated domain leaf".into()));
        }
        let mut sources: Vec<&Word> = sigma.keys().collect();
        sources.sort();
        if !sources.iter().zip(d.iter()).all(|(a, b)| *a == b) {
            return Err(PairError::BadBijection("sources differ from domain leaves".into()));
        }
        let mut targets: Vec<&Word> = sigma.values().collect();
        targets.sort();
        targets.dedup();
        if targets.len() != r.len() || !targets.iter().zip(r.iter()).all(|(a, b)| *a == b) {
            return Err(PairError::BadBijection("targets differ from range leaves".into()));
        }
        Ok(TreePair { d, r, sigma })
    }

    /// The root-only pair describing the identity map.
    pub fn identity() -> TreePair {
        let e = Word::empty();
        TreePair {
            d: vec![e.clone()],
            r: vec![e.clone()],
            sigma: BTreeMap::from([(e.clone(), e)]),
        }
    }

    /// Domain leaves in sorted order.
    pub fn d_leaves(&self) -> &[Word] {
        &self.d
    }

    /// Range leaves in sorted order.
    pub fn r_leaves(&self) -> &[Word] {
        &self.r
    }

    /// Image of a domain leaf.  Panics when `u` is not a domain leaf.
    pub fn sigma(&self, u: &Word) -> &Word {
        &self.sigma[u]
    }

    /// The leaf bijection as a map.
    pub fn sigma_map(&self) -> &BTreeMap<Word, Word> {
        &self.sigma
    }

    /// Preimage of a range leaf.  Panics when `v` is not a range leaf.
    pub fn sigma_inv(&self, v: &Word) -> Word {
        self.sigma
            .iter()
            .find(|(_, t)| *t == v)
            .map(|(s, _)| s.clone())
            .expect("not a range leaf")
    }

    /// The pair describing the inverse map: trees swapped, bijection inverted.
    pub fn invert(&self) -> TreePair {
        TreePair {
            d: self.r.clone(),
            r: self.d.clone(),
            sigma: self.sigma.iter().map(|(s, t)| (t.clone(), s.clone())).collect(),
        }
    }

    /// The prefix-replacement map this pair describes, as a one-dimensional
    /// pattern-pair element.
    pub fn to_element(&self) -> Element {
        let domain = Pattern::from_partition(
            self.d.iter().map(|w| Brick::new(vec![w.clone()])).collect(),
        );
        let range = Pattern::from_partition(
            self.d.iter().map(|w| Brick::new(vec![self.sigma[w].clone()])).collect(),
        );
        Element::new(domain, range).expect("leaf trees give matching patterns")
    }

    /// Reads a tree pair off a one-dimensional element: domain bricks become
    /// domain leaves, and each brick's image becomes its leaf image.
    pub fn from_element(f: &Element) -> Result<TreePair, PairError> {
        if f.dim() != 1 {
            return Err(PairError::Dimension(f.dim()));
        }
        let pairs: Vec<(Word, Word)> = (0..f.size())
            .map(|i| (f.domain().brick(i).word(0).clone(), f.range().brick(i).word(0).clone()))
            .collect();
        TreePair::new(
            pairs.iter().map(|(s, _)| s.clone()).collect(),
            pairs.iter().map(|(_, t)| t.clone()).collect(),
            pairs,
        )
    }

    /// Do the two pairs describe the same map?
    pub fn same_map(&self, other: &TreePair) -> bool {
        self.to_element().equals(&other.to_element())
    }

    /// Is this the pair of a map fixing every point (sigma the identity on a
    /// common tree)?  Weaker test than describing the identity map.
    pub fn is_permutation(&self) -> bool {
        self.d == self.r
    }
}

fn word_token(w: &Word) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_string()
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(word_token).collect();
        let r: Vec<String> = self.r.iter().map(word_token).collect();
        let s: Vec<String> = self
            .d
            .iter()
            .map(|u| format!("{}->{}", word_token(u), word_token(&self.sigma[u])))
            .collect();
        write!(f, "D: {} | R: {} | sigma: {}", d.join(" "), r.join(" "), s.join(" "))
    }
}

impl FromStr for TreePair {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<TreePair, ParseError> {
        let sections: Vec<&str> = s.split('|').map(str::trim).collect();
        if sections.len() != 3 {
            return Err(ParseError::new("expected three |-separated sections"));
        }
        let d_part = sections[0]
            .strip_prefix("D:")
            .ok_or_else(|| ParseError::new("first section must start with 'D:'"))?;
        let r_part = sections[1]
            .strip_prefix("R:")
            .ok_or_else(|| ParseError::new("second section must start with 'R:'"))?;
        let s_part = sections[2]
            .strip_prefix("sigma:")
            .ok_or_else(|| ParseError::new("third section must start with 'sigma:'"))?;
        let parse_words = |part: &str| -> Result<Vec<Word>, ParseError> {
            part.split_whitespace().map(|tok| tok.parse::<Word>()).collect()
        };
        let d = parse_words(d_part)?;
        let r = parse_words(r_part)?;
        let pairs: Vec<(Word, Word)> = s_part
            .split_whitespace()
            .map(|tok| {
                let (a, b) = tok
                    .split_once("->")
                    .ok_or_else(|| ParseError::new(format!("bad sigma entry '{tok}'")))?;
                Ok((a.parse::<Word>()?, b.parse::<Word>()?))
            })
            .collect::<Result<_, ParseError>>()?;
        TreePair::new(d, r, pairs).map_err(|e| ParseError::new(e.to_string()))
    }
}
