//! Augmentations: growing a tree pair without changing the map it describes.
//!
//! Hanging the same relative tree below a domain leaf and below its image
//! leaf refines the pair while keeping the underlying prefix-replacement map
//! fixed.  An iterated augmentation does this along a chain of leaves, each
//! the image of the previous one.

use crate::pair::TreePair;
use crate::tree;
use cantor_core::Word;
use std::collections::BTreeMap;
use std::fmt;

/// Why an augmentation request is invalid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AugmentError {
    NotADomainLeaf(Word),
    BadTree(String),
    RepeatedChainLeaf(Word),
    BrokenChain { leaf: Word, image: Word, next: Word },
    ChainClosesUp(Word),
    EmptyChain,
}

impl fmt::Display for AugmentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AugmentError::NotADomainLeaf(u) => write!(f, "'{u}' is not a domain leaf"),
            AugmentError::BadTree(msg) => write!(f, "invalid relative tree: {msg}"),
            AugmentError::RepeatedChainLeaf(u) => write!(f, "chain repeats leaf '{u}'"),
            AugmentError::BrokenChain { leaf, image, next } => write!(
                f,
                "chain breaks at '{leaf}': its image is '{image}' but the chain continues with '{next}'"
            ),
            AugmentError::ChainClosesUp(u) => {
                write!(f, "the image '{u}' of the last chain leaf lies back on the chain")
            }
            AugmentError::EmptyChain => write!(f, "chain is empty"),
        }
    }
}

impl std::error::Error for AugmentError {}

/// Hangs the relative tree `rel` below domain leaf `u` and below its image
/// leaf, extending the leaf bijection by `u t -> sigma(u) t`.  The trivial
/// relative tree (just the root) returns the pair unchanged.
pub fn augment(pair: &TreePair, u: &Word, rel: &[Word]) -> Result<TreePair, AugmentError> {
    tree::validate_leaves(rel).map_err(|e| AugmentError::BadTree(e.to_string()))?;
    if !pair.d_leaves().contains(u) {
        return Err(AugmentError::NotADomainLeaf(u.clone()));
    }
    let w = pair.sigma(u).clone();
    let mut d: Vec<Word> = pair.d_leaves().iter().filter(|l| *l != u).cloned().collect();
    let mut r: Vec<Word> = pair.r_leaves().iter().filter(|l| **l != w).cloned().collect();
    let mut sigma: BTreeMap<Word, Word> = pair
        .sigma_map()
        .iter()
        .filter(|(s, _)| *s != u)
        .map(|(s, t)| (s.clone(), t.clone()))
        .collect();
    for t in rel {
        let du = u.concat(t);
        let rw = w.concat(t);
        d.push(du.clone());
        r.push(rw.clone());
        sigma.insert(du, rw);
    }
    TreePair::new(d, r, sigma.into_iter().collect())
        .map_err(|e| AugmentError::BadTree(e.to_string()))
}

/// Augments by `rel` below every leaf of `chain` at once, where the chain
/// must satisfy `chain[i+1] = sigma(chain[i])` with all members distinct and
/// the image of the last member off the chain.  The augmentations are then
/// independent and are applied from the end of the chain backwards.
pub fn iterated_augment(
    pair: &TreePair,
    chain: &[Word],
    rel: &[Word],
) -> Result<TreePair, AugmentError> {
    if chain.is_empty() {
        return Err(AugmentError::EmptyChain);
    }
    for (i, u) in chain.iter().enumerate() {
        if chain[..i].contains(u) {
            return Err(AugmentError::RepeatedChainLeaf(u.clone()));
        }
        if !pair.d_leaves().contains(u) {
            return Err(AugmentError::NotADomainLeaf(u.clone()));
        }
        let image = pair.sigma(u).clone();
        match chain.get(i + 1) {
            Some(next) if *next != image => {
                return Err(AugmentError::BrokenChain { leaf: u.clone(), image, next: next.clone() })
            }
            Some(_) => {}
            None => {
                if chain.contains(&image) {
                    return Err(AugmentError::ChainClosesUp(image));
                }
            }
        }
    }
    let mut out = pair.clone();
    for u in chain.iter().rev() {
        out = augment(&out, u, rel)?;
    }
    Ok(out)
}
