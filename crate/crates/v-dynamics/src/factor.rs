//! Factoring tree pairs into permutation pairs, and extracting deep
//! prefix transpositions by commutators.
//!
//! A *permutation pair* has equal domain and range trees, so it only
//! permutes the leaf intervals.  Every tree pair factors into permutation
//! pairs: repeatedly pre-compose with a permutation that lines the smallest
//! exposed domain caret up with the smallest exposed range caret, then
//! remove that caret from both trees.
//!
//! A *transposition* is the permutation pair swapping the intervals below
//! two incomparable addresses and fixing everything else; it is *proper*
//! when both addresses have length at least three.  From any non-identity
//! pair `f`, two nested commutators produce a proper transposition:
//! `h = [g, f]` with `g` a sibling swap below a moved interval is a double
//! transposition, and `k = [j, h]` with `j` swapping corresponding children
//! collapses it to a single proper transposition.

use crate::pair::TreePair;
use crate::tree;
use cantor_core::Word;
use nv_elements::{compose, Element};
use std::fmt;

/// Why a transposition request or extraction fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorError {
    /// The two addresses are comparable, so no swap of their intervals
    /// exists inside the group.
    ComparableAddresses(Word, Word),
    /// The map is the identity; it has no moved leaf to work from.
    IdentityInput,
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::ComparableAddresses(u, v) => {
                write!(f, "addresses '{u}' and '{v}' are comparable")
            }
            FactorError::IdentityInput => write!(f, "the identity map has no transposition"),
        }
    }
}

impl std::error::Error for FactorError {}

/// The permutation pair swapping the intervals below `u` and `v` (which must
/// be incomparable) and fixing the rest of the space.
pub fn transposition(u: &Word, v: &Word) -> Result<TreePair, FactorError> {
    if u.is_prefix_of(v) || v.is_prefix_of(u) {
        return Err(FactorError::ComparableAddresses(u.clone(), v.clone()));
    }
    let mut leaves = vec![Word::empty()];
    tree::grow_to_leaf(&mut leaves, u);
    tree::grow_to_leaf(&mut leaves, v);
    let pairs: Vec<(Word, Word)> = leaves
        .iter()
        .map(|x| {
            if x == u {
                (x.clone(), v.clone())
            } else if x == v {
                (x.clone(), u.clone())
            } else {
                (x.clone(), x.clone())
            }
        })
        .collect();
    Ok(TreePair::new(leaves.clone(), leaves, pairs).expect("swap of two leaves is a bijection"))
}

/// Factors `pair` into permutation pairs whose left-to-right composition
/// (rightmost applied first) equals the map of `pair`.  The first factor
/// carries whatever leaf permutation is left once the trees agree; the
/// remaining factors are inverses of the caret-aligning permutations, so
/// every factor has equal domain and range trees.
pub fn permutation_factor(pair: &TreePair) -> Vec<TreePair> {
    let mut work = pair.clone();
    let mut aligners: Vec<TreePair> = Vec::new();
    while !work.is_permutation() {
        let u = tree::exposed_carets(work.d_leaves())
            .into_iter()
            .next()
            .expect("a nonempty tree has an exposed caret");
        let w = tree::exposed_carets(work.r_leaves())
            .into_iter()
            .next()
            .expect("a nonempty tree has an exposed caret");
        let (u0, u1) = (u.child(0), u.child(1));
        let (w0, w1) = (w.child(0), w.child(1));
        let p0 = work.sigma_inv(&w0);
        let p1 = work.sigma_inv(&w1);
        let d: Vec<Word> = work.d_leaves().to_vec();
        let rest_src: Vec<Word> = d.iter().filter(|x| **x != u0 && **x != u1).cloned().collect();
        let rest_tgt: Vec<Word> = d.iter().filter(|x| **x != p0 && **x != p1).cloned().collect();
        let mut tau: Vec<(Word, Word)> = vec![(u0.clone(), p0), (u1.clone(), p1)];
        tau.extend(rest_src.into_iter().zip(rest_tgt));
        let t = TreePair::new(d.clone(), d.clone(), tau)
            .expect("caret alignment is a leaf permutation");
        // Pre-composing with t sends the caret at u onto the caret at w;
        // un-augmenting both carets leaves the same map on smaller trees.
        let mut nd: Vec<Word> = Vec::with_capacity(d.len() - 1);
        let mut nr: Vec<Word> = Vec::with_capacity(d.len() - 1);
        let mut ns: Vec<(Word, Word)> = Vec::with_capacity(d.len() - 1);
        for x in &d {
            if *x == u0 || *x == u1 {
                continue;
            }
            let y = work.sigma(t.sigma(x)).clone();
            nd.push(x.clone());
            nr.push(y.clone());
            ns.push((x.clone(), y));
        }
        nd.push(u.clone());
        nr.push(w.clone());
        ns.push((u.clone(), w.clone()));
        work = TreePair::new(nd, nr, ns).expect("removing matched carets keeps valid trees");
        aligners.push(t);
    }
    let mut out = vec![work];
    out.extend(aligners.into_iter().rev().map(|t| t.invert()));
    out
}

/// Composes a factor list left to right (rightmost factor applied first)
/// into a single map.
pub fn compose_factors(factors: &[TreePair]) -> Element {
    let mut acc = Element::identity(1);
    for f in factors {
        acc = compose(&acc, &f.to_element()).reduce();
    }
    acc
}

/// The data certifying how a proper transposition was produced from a map
/// `f`: the map carries the interval below `u` onto the interval below `v`,
/// and the commutators `h = [g, f]`, `k = [j, h]` collapse that action into
/// the transposition swapping `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionCertificate {
    pub u: Word,
    pub v: Word,
    pub g: TreePair,
    pub j: TreePair,
}

/// Extracts a proper transposition (both swapped addresses of length at
/// least three) from a non-identity pair by two nested commutators, and
/// verifies the result against the directly built transposition.
pub fn extract_proper_transposition(
    pair: &TreePair,
) -> Result<(TreePair, TranspositionCertificate), FactorError> {
    let f = pair.to_element().reduce();
    if f.is_identity() {
        return Err(FactorError::IdentityInput);
    }
    let reduced = TreePair::from_element(&f).expect("one-dimensional input stays one-dimensional");
    let moved = reduced
        .d_leaves()
        .iter()
        .find(|x| reduced.sigma(x) != *x)
        .expect("a non-identity map moves a leaf")
        .clone();
    let image = reduced.sigma(&moved).clone();
    // Find incomparable u, v with f mapping the interval below u onto the
    // interval below v by prefix replacement.
    let (mut u, mut v) = if let Some(rest) = image.strip_prefix(&moved) {
        if rest.is_empty() {
            unreachable!("moved leaf has a different image");
        }
        let b = 1 - rest.first().expect("nonempty");
        (moved.child(b), image.child(b))
    } else if let Some(rest) = moved.strip_prefix(&image) {
        let b = 1 - rest.first().expect("proper prefix leaves a nonempty tail");
        (moved.child(b), image.child(b))
    } else {
        (moved.clone(), image.clone())
    };
    while u.len() < 3 || v.len() < 3 {
        u.push(0);
        v.push(0);
    }
    let g = transposition(&u.child(0), &u.child(1)).expect("siblings are incomparable");
    let g_el = g.to_element();
    let h = compose(&compose(&compose(&g_el, &f), &g_el), &f.invert()).reduce();
    let j = transposition(&u.child(0), &v.child(0)).expect("children of incomparable addresses");
    let j_el = j.to_element();
    let k = compose(&compose(&compose(&j_el, &h), &j_el), &h.invert()).reduce();
    let direct = transposition(&u, &v)?;
    assert!(
        k.equals(&direct.to_element()),
        "nested commutators must collapse to the transposition swapping {u} and {v}"
    );
    let k_pair = TreePair::from_element(&k).expect("one-dimensional by construction");
    Ok((k_pair, TranspositionCertificate { u, v, g, j }))
}
