//! Shared corpus builders for the acceptance suite.
//!
//! The one-dimensional dynamics corpus feeds two separate checks — the
//! brute-force orbit census and the period-separation witness — which must
//! agree on the corpus exactly, so both rebuild it from the same stream
//! through [`dynamics_corpus`].

use cantor_core::corpus_rng;
use nv_elements::random_element;
use std::str::FromStr;
use v_dynamics::TreePair;

/// Random-number stream of the corpus generator feeding the dynamics criteria.
pub const DYNAMICS_STREAM: u64 = 62;

/// Hand-picked one-dimensional examples covering every orbit flavour:
/// the identity, pure permutations and interval cycles, and maps with
/// isolated attracting and repelling orbits on one or both sides.
pub fn worked_examples() -> Vec<TreePair> {
    [
        "D: 0 1 | R: 0 1 | sigma: 0->0 1->1",
        "D: 0 1 | R: 0 1 | sigma: 0->1 1->0",
        "D: 00 01 10 11 | R: 00 01 10 11 | sigma: 00->01 01->10 10->11 11->00",
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11",
        "D: 0 10 11 | R: 00 01 1 | sigma: 0->00 10->01 11->1",
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->10 01->11 1->0",
    ]
    .iter()
    .map(|s| TreePair::from_str(s).expect("worked example parses"))
    .collect()
}

/// The dynamics corpus: the worked examples plus fifty random
/// one-dimensional elements of at most eight splits each.
pub fn dynamics_corpus() -> Vec<TreePair> {
    let mut rng = corpus_rng(DYNAMICS_STREAM);
    let mut corpus = worked_examples();
    for _ in 0..50 {
        let f = random_element(&mut rng, 1, 8);
        corpus.push(TreePair::from_element(&f).expect("one-dimensional element"));
    }
    corpus
}
