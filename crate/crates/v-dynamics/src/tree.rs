//! Finite binary trees represented by their leaf sets.
//!
//! A tree is stored as the sorted list of its leaf addresses (binary words).
//! A leaf list is valid when the corresponding dyadic intervals partition the
//! unit interval, i.e. the words form a complete prefix code.  The root-only
//! tree is the singleton list containing the empty word.

use cantor_core::{Brick, Pattern, Word};
use std::collections::BTreeSet;
use std::fmt;

/// Why a leaf list fails to describe a finite binary tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    Empty,
    NotAPartition(String),
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::Empty => write!(f, "leaf list is empty"),
            TreeError::NotAPartition(msg) => {
                write!(f, "leaves do not form a complete prefix code: {msg}")
            }
        }
    }
}

impl std::error::Error for TreeError {}

/// Checks that `leaves` is the leaf set of a finite binary tree.
pub fn validate_leaves(leaves: &[Word]) -> Result<(), TreeError> {
    if leaves.is_empty() {
        return Err(TreeError::Empty);
    }
    let bricks: Vec<Brick> = leaves.iter().map(|w| Brick::new(vec![w.clone()])).collect();
    Pattern::new(bricks).map_err(|e| TreeError::NotAPartition(e.to_string()))?;
    Ok(())
}

/// Sorts a leaf list into canonical (lexicographic, prefix-first) order.
pub fn sorted(mut leaves: Vec<Word>) -> Vec<Word> {
    leaves.sort();
    leaves
}

/// All interior vertices of the tree: proper prefixes of leaves.
pub fn interior_vertices(leaves: &[Word]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for leaf in leaves {
        for k in 0..leaf.len() {
            out.insert(Word::from_bits(leaf.bits()[..k].iter().copied()));
        }
    }
    out
}

/// Does `w` sit strictly above some leaf (i.e. is it an interior vertex)?
pub fn is_interior(leaves: &[Word], w: &Word) -> bool {
    leaves.iter().any(|leaf| w.is_prefix_of(leaf) && w.len() < leaf.len())
}

/// The unique leaf lying on the path to `w` (a prefix of `w`, possibly `w`
/// itself), if any.  Returns `None` when `w` is interior or above the tree.
pub fn leaf_above(leaves: &[Word], w: &Word) -> Option<Word> {
    leaves.iter().find(|leaf| leaf.is_prefix_of(w)).cloned()
}

/// Leaves of the subtree rooted at `root`, written relative to `root`.
/// Empty when `root` is not a vertex of the tree with descendants, except
/// that a leaf `root` yields the root-only relative tree.
pub fn subtree_leaves(leaves: &[Word], root: &Word) -> Vec<Word> {
    let mut rel: Vec<Word> = leaves
        .iter()
        .filter_map(|leaf| leaf.strip_prefix(root))
        .collect();
    rel.sort();
    rel
}

/// Interior vertices `w` whose two children are both leaves, in sorted order.
pub fn exposed_carets(leaves: &[Word]) -> Vec<Word> {
    let leaf_set: BTreeSet<&Word> = leaves.iter().collect();
    let mut out: Vec<Word> = leaves
        .iter()
        .filter(|leaf| leaf.last() == Some(0))
        .filter_map(|leaf| {
            let parent = leaf.parent()?;
            let sib = leaf.sibling()?;
            leaf_set.contains(&sib).then_some(parent)
        })
        .collect();
    out.sort();
    out
}

/// Grows the tree until `target` is a leaf, splitting leaves on the path as
/// needed.  `target` must not be a proper prefix of an existing leaf's strict
/// ancestor situation that already passed it — i.e. it must lie on or below
/// the current tree.  Panics if `target` is strictly above an interior vertex
/// split (cannot happen when starting from a tree containing the root).
pub fn grow_to_leaf(leaves: &mut Vec<Word>, target: &Word) {
    loop {
        if leaves.iter().any(|l| l == target) {
            leaves.sort();
            return;
        }
        let on_path = leaves
            .iter()
            .position(|l| l.is_prefix_of(target))
            .expect("target lies below an interior vertex of the tree");
        let stub = leaves.remove(on_path);
        leaves.push(stub.child(0));
        leaves.push(stub.child(1));
    }
}
