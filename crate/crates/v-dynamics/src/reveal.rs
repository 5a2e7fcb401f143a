//! Revealing a tree pair: augmenting it until the dynamics can be read off.
//!
//! For a pair `(D, R, sigma)` the difference trees split the leaves into
//! components.  A component of `D - R` is the subtree of `D` hanging below a
//! range leaf that is interior in `D`; components of `R - D` are defined
//! symmetrically.  A component is *resolved* when tracing its root backwards
//! through the leaf bijection (staying on leaves common to both trees) ends
//! at a leaf inside the component itself: that terminal leaf spans a
//! repelling (resp. attracting) periodic orbit.  A pair is *revealed* when
//! every component on both sides is resolved.
//!
//! Revealing proceeds by augmentation moves along the traced chains.  Each
//! move strictly decreases the triple (imbalance, number of `D - R`
//! components, number of `R - D` components) in lexicographic order, so the
//! process terminates; the result describes the same map as the input.

use crate::augment::iterated_augment;
use crate::pair::TreePair;
use crate::tree;
use cantor_core::Word;
use std::collections::{BTreeMap, BTreeSet};

/// Deterministic processing orders for the revealing loop.  Both yield a
/// revealed pair for the same map; reports built from either must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RevealOrder {
    /// Components by ascending root, imbalance-reducing moves preferred,
    /// domain-side phase first.
    Standard,
    /// Components by descending root, component-merging moves preferred,
    /// range-side phase first.
    Alternate,
}

/// One resolved difference component together with its traced orbit data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Root of the component: a leaf of one tree, interior in the other.
    pub root: Word,
    /// Leaves of the component subtree, relative to `root`.
    pub rel_leaves: Vec<Word>,
    /// Interior vertices of the component subtree, in absolute address form.
    pub carets: Vec<Word>,
    /// The component leaf whose backward trace stays inside the component;
    /// it spans the periodic orbit.  Absolute address, strictly below `root`.
    pub lambda: Word,
    /// The forward orbit of leaves `lambda, sigma(lambda), ...`; the image of
    /// the last entry is `root`.  Its length is the orbit period.
    pub chain: Vec<Word>,
}

impl Component {
    /// Component leaves in absolute address form.
    pub fn abs_leaves(&self) -> Vec<Word> {
        self.rel_leaves.iter().map(|t| self.root.concat(t)).collect()
    }

    /// The orbit period read off the chain.
    pub fn period(&self) -> usize {
        self.chain.len()
    }
}

/// How a domain leaf participates in the dynamics of a revealed pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DLeafClass {
    /// Common leaf of both trees.
    Neutral,
    /// Spans a repelling periodic orbit.
    Repeller,
    /// Non-repeller leaf of a `D - R` component: points eventually leave.
    Source,
    /// Root of an `R - D` component: points fall towards its attractor.
    DomainOfAttraction,
}

/// How a range leaf participates in the dynamics of a revealed pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RLeafClass {
    /// Common leaf of both trees.
    Neutral,
    /// Spans an attracting periodic orbit.
    Attractor,
    /// Non-attractor leaf of an `R - D` component: points keep arriving.
    Sink,
    /// Root of a `D - R` component: points escape from its repeller.
    RangeOfRepulsion,
}

/// A revealed tree pair with its difference components, neutral cycles, and
/// revealing statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevealedPair {
    pair: TreePair,
    repelling: Vec<Component>,
    attracting: Vec<Component>,
    neutral_cycles: Vec<Vec<Word>>,
    imbalance: usize,
    steps: usize,
}

/// Number of interior vertices of `D` that are not interior in `R` (equal to
/// the count the other way around): the caret imbalance of the pair.
pub fn imbalance(pair: &TreePair) -> usize {
    let d = tree::interior_vertices(pair.d_leaves());
    let r = tree::interior_vertices(pair.r_leaves());
    let forward = d.difference(&r).count();
    debug_assert_eq!(forward, r.difference(&d).count());
    forward
}

/// Roots of the components of `D - R`: range leaves interior in `D`, sorted.
pub fn difference_roots(pair: &TreePair) -> Vec<Word> {
    pair.r_leaves()
        .iter()
        .filter(|w| tree::is_interior(pair.d_leaves(), w))
        .cloned()
        .collect()
}

/// Cycles of the leaf bijection on the common leaves of both trees.  Each
/// cycle is listed from its smallest member in orbit order; common leaves
/// whose orbit leaves the common part are not part of any cycle.
pub fn neutral_cycles(pair: &TreePair) -> Vec<Vec<Word>> {
    let r_set: BTreeSet<&Word> = pair.r_leaves().iter().collect();
    let neutrals: Vec<&Word> =
        pair.d_leaves().iter().filter(|w| r_set.contains(w)).collect();
    let neutral_set: BTreeSet<&Word> = neutrals.iter().copied().collect();
    let mut done: BTreeSet<Word> = BTreeSet::new();
    let mut cycles = Vec::new();
    for start in neutrals {
        if done.contains(start) {
            continue;
        }
        let mut path = vec![start.clone()];
        let mut y = pair.sigma(start).clone();
        loop {
            if y == *start {
                for p in &path {
                    done.insert(p.clone());
                }
                cycles.push(path);
                break;
            }
            // A path that leaves the common leaves, or runs into an earlier
            // traversal, can never cycle back to its start: a cycle member's
            // unique preimage is its cycle predecessor, so paths only join
            // other transient paths.
            if !neutral_set.contains(&y) || done.contains(&y) {
                for p in &path {
                    done.insert(p.clone());
                }
                break;
            }
            path.push(y.clone());
            y = pair.sigma(&y).clone();
        }
    }
    cycles
}

enum Traced {
    Resolved { lambda: Word, chain: Vec<Word> },
    Unresolved { reduces_imbalance: bool, chain: Vec<Word>, rel: Vec<Word> },
}

/// Walks `sigma` backwards from the component root while the trace stays on
/// common leaves, then classifies the terminal leaf.
fn trace_component(pair: &TreePair, root: &Word) -> Traced {
    let r_set: BTreeSet<&Word> = pair.r_leaves().iter().collect();
    let mut rev_neutrals: Vec<Word> = Vec::new();
    let mut y = root.clone();
    loop {
        let x = pair.sigma_inv(&y);
        if r_set.contains(&x) {
            rev_neutrals.push(x.clone());
            y = x;
            continue;
        }
        let mut chain = Vec::with_capacity(rev_neutrals.len() + 1);
        chain.push(x.clone());
        chain.extend(rev_neutrals.into_iter().rev());
        if tree::is_interior(pair.r_leaves(), &x) {
            let rel = tree::subtree_leaves(pair.d_leaves(), root);
            return Traced::Unresolved { reduces_imbalance: true, chain, rel };
        }
        let above = tree::leaf_above(pair.r_leaves(), &x)
            .expect("a domain leaf not interior in the range tree lies under a range leaf");
        if &above == root {
            return Traced::Resolved { lambda: x, chain };
        }
        let rel = tree::subtree_leaves(pair.d_leaves(), root);
        return Traced::Unresolved { reduces_imbalance: false, chain, rel };
    }
}

/// Finds the next augmentation move among the `D - R` components of `pair`,
/// honouring the requested component order and move preference.
fn find_move(
    pair: &TreePair,
    descending: bool,
    prefer_merging: bool,
) -> Option<(Vec<Word>, Vec<Word>)> {
    let mut roots = difference_roots(pair);
    if descending {
        roots.reverse();
    }
    let mut imbalance_move = None;
    let mut merging_move = None;
    for root in roots {
        match trace_component(pair, &root) {
            Traced::Resolved { .. } => {}
            Traced::Unresolved { reduces_imbalance, chain, rel } => {
                if reduces_imbalance {
                    imbalance_move.get_or_insert((chain, rel));
                } else {
                    merging_move.get_or_insert((chain, rel));
                }
            }
        }
        let preferred_found =
            if prefer_merging { merging_move.is_some() } else { imbalance_move.is_some() };
        if preferred_found {
            break;
        }
    }
    if prefer_merging {
        merging_move.or(imbalance_move)
    } else {
        imbalance_move.or(merging_move)
    }
}

fn measure(pair: &TreePair) -> (usize, usize, usize) {
    (imbalance(pair), difference_roots(pair).len(), difference_roots(&pair.invert()).len())
}

/// Augments `pair` until both sides are resolved, returning the revealed
/// pair with its components, neutral cycles, and step count.  Panics only on
/// internal invariant violations (each move must shrink the measure).
pub fn reveal(pair: &TreePair, order: RevealOrder) -> RevealedPair {
    let mut work = pair.clone();
    let mut steps = 0usize;
    loop {
        let before = measure(&work);
        let (descending, prefer_merging, primal_first) = match order {
            RevealOrder::Standard => (false, false, true),
            RevealOrder::Alternate => (true, true, false),
        };
        let primal = || find_move(&work, descending, prefer_merging).map(|m| (false, m));
        let dual = || find_move(&work.invert(), descending, prefer_merging).map(|m| (true, m));
        let found = if primal_first { primal().or_else(dual) } else { dual().or_else(primal) };
        let Some((on_inverse, (chain, rel))) = found else { break };
        work = if on_inverse {
            iterated_augment(&work.invert(), &chain, &rel)
                .expect("traced chains satisfy the augmentation conditions")
                .invert()
        } else {
            iterated_augment(&work, &chain, &rel)
                .expect("traced chains satisfy the augmentation conditions")
        };
        steps += 1;
        let after = measure(&work);
        assert!(
            after < before,
            "revealing move must shrink (imbalance, components) lexicographically: {before:?} -> {after:?}"
        );
    }
    RevealedPair::collect(work, steps)
}

fn collect_components(pair: &TreePair) -> Vec<Component> {
    difference_roots(pair)
        .into_iter()
        .map(|root| match trace_component(pair, &root) {
            Traced::Resolved { lambda, chain } => {
                let rel_leaves = tree::subtree_leaves(pair.d_leaves(), &root);
                let carets: Vec<Word> = tree::interior_vertices(&rel_leaves)
                    .into_iter()
                    .map(|t| root.concat(&t))
                    .collect();
                Component { root, rel_leaves, carets, lambda, chain }
            }
            Traced::Unresolved { .. } => {
                unreachable!("revealed pairs have only resolved components")
            }
        })
        .collect()
}

impl RevealedPair {
    fn collect(pair: TreePair, steps: usize) -> RevealedPair {
        let repelling = collect_components(&pair);
        let attracting = collect_components(&pair.invert());
        let cycles = neutral_cycles(&pair);
        let imb = imbalance(&pair);
        let out = RevealedPair {
            pair,
            repelling,
            attracting,
            neutral_cycles: cycles,
            imbalance: imb,
            steps,
        };
        assert_eq!(out.source_count(), out.sink_count(), "sources must pair with sinks");
        assert_eq!(out.source_count(), out.imbalance, "source count must equal the imbalance");
        out
    }

    /// The revealed pair itself (same map as the input pair).
    pub fn pair(&self) -> &TreePair {
        &self.pair
    }

    /// Components of `D - R`, each spanning a repelling orbit.
    pub fn repelling_components(&self) -> &[Component] {
        &self.repelling
    }

    /// Components of `R - D`, each spanning an attracting orbit.
    pub fn attracting_components(&self) -> &[Component] {
        &self.attracting
    }

    /// Cycles of the leaf bijection on common leaves.
    pub fn neutral_cycles(&self) -> &[Vec<Word>] {
        &self.neutral_cycles
    }

    /// Caret imbalance of the revealed pair.
    pub fn imbalance(&self) -> usize {
        self.imbalance
    }

    /// Number of augmentation moves the revealing loop used.
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Classification of every domain leaf.
    pub fn d_classes(&self) -> BTreeMap<Word, DLeafClass> {
        let mut out: BTreeMap<Word, DLeafClass> = self
            .pair
            .d_leaves()
            .iter()
            .map(|w| (w.clone(), DLeafClass::Neutral))
            .collect();
        for comp in &self.repelling {
            for leaf in comp.abs_leaves() {
                let class =
                    if leaf == comp.lambda { DLeafClass::Repeller } else { DLeafClass::Source };
                out.insert(leaf, class);
            }
        }
        for comp in &self.attracting {
            out.insert(comp.root.clone(), DLeafClass::DomainOfAttraction);
        }
        out
    }

    /// Classification of every range leaf.
    pub fn r_classes(&self) -> BTreeMap<Word, RLeafClass> {
        let mut out: BTreeMap<Word, RLeafClass> = self
            .pair
            .r_leaves()
            .iter()
            .map(|w| (w.clone(), RLeafClass::Neutral))
            .collect();
        for comp in &self.attracting {
            for leaf in comp.abs_leaves() {
                let class =
                    if leaf == comp.lambda { RLeafClass::Attractor } else { RLeafClass::Sink };
                out.insert(leaf, class);
            }
        }
        for comp in &self.repelling {
            out.insert(comp.root.clone(), RLeafClass::RangeOfRepulsion);
        }
        out
    }

    /// Number of source leaves (equals the imbalance).
    pub fn source_count(&self) -> usize {
        self.repelling.iter().map(|c| c.rel_leaves.len() - 1).sum()
    }

    /// Number of sink leaves (equals the imbalance).
    pub fn sink_count(&self) -> usize {
        self.attracting.iter().map(|c| c.rel_leaves.len() - 1).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ws(s: &str) -> Vec<Word> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn order_preserving_shift_is_already_revealed() {
        let p: TreePair =
            "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11".parse().unwrap();
        for order in [RevealOrder::Standard, RevealOrder::Alternate] {
            let rev = reveal(&p, order);
            assert_eq!(rev.steps(), 0);
            assert_eq!(rev.pair(), &p);
            assert_eq!(rev.imbalance(), 1);
            assert_eq!(rev.repelling_components().len(), 1);
            let rep = &rev.repelling_components()[0];
            assert_eq!(rep.root, w("0"));
            assert_eq!(rep.lambda, w("00"));
            assert_eq!(rep.chain, ws("00"));
            assert_eq!(rep.rel_leaves, ws("0 1"));
            assert_eq!(rep.carets, ws("0"));
            let att = &rev.attracting_components()[0];
            assert_eq!(att.root, w("1"));
            assert_eq!(att.lambda, w("11"));
            assert_eq!(att.chain, ws("11"));
            assert!(rev.neutral_cycles().is_empty());
            assert_eq!(rev.d_classes()[&w("01")], DLeafClass::Source);
            assert_eq!(rev.d_classes()[&w("00")], DLeafClass::Repeller);
            assert_eq!(rev.d_classes()[&w("1")], DLeafClass::DomainOfAttraction);
            assert_eq!(rev.r_classes()[&w("10")], RLeafClass::Sink);
            assert_eq!(rev.r_classes()[&w("11")], RLeafClass::Attractor);
            assert_eq!(rev.r_classes()[&w("0")], RLeafClass::RangeOfRepulsion);
            assert_eq!(rev.source_count(), 1);
            assert_eq!(rev.sink_count(), 1);
        }
    }

    #[test]
    fn shifted_bijection_reveals_to_a_permutation() {
        let p: TreePair =
            "D: 00 01 1 | R: 0 10 11 | sigma: 00->10 01->11 1->0".parse().unwrap();
        let rev = reveal(&p, RevealOrder::Standard);
        assert_eq!(rev.steps(), 1);
        assert!(rev.pair().is_permutation());
        assert_eq!(rev.pair().d_leaves(), &ws("00 01 10 11")[..]);
        assert_eq!(rev.imbalance(), 0);
        assert!(rev.repelling_components().is_empty());
        assert!(rev.attracting_components().is_empty());
        assert_eq!(rev.neutral_cycles(), &[ws("00 10"), ws("01 11")]);
        assert!(rev.pair().same_map(&p));
        let alt = reveal(&p, RevealOrder::Alternate);
        assert_eq!(alt.neutral_cycles(), rev.neutral_cycles());
    }

    #[test]
    fn identity_reveals_to_a_single_fixed_interval() {
        let rev = reveal(&TreePair::identity(), RevealOrder::Standard);
        assert_eq!(rev.steps(), 0);
        assert_eq!(rev.imbalance(), 0);
        assert_eq!(rev.neutral_cycles(), &[ws("e")]);
    }

    #[test]
    fn revealing_preserves_the_map_on_a_mixed_example() {
        let p: TreePair =
            "D: 000 001 01 1 | R: 0 10 110 111 | sigma: 000->110 001->0 01->111 1->10"
                .parse()
                .unwrap();
        for order in [RevealOrder::Standard, RevealOrder::Alternate] {
            let rev = reveal(&p, order);
            assert!(rev.pair().same_map(&p), "revealing changed the map");
            for comp in rev.repelling_components() {
                assert!(comp.lambda.strip_prefix(&comp.root).is_some());
                assert_eq!(comp.chain.first(), Some(&comp.lambda));
            }
            assert_eq!(rev.source_count(), rev.imbalance());
        }
    }

    #[test]
    fn imbalance_counts_unshared_carets() {
        let p: TreePair =
            "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11".parse().unwrap();
        assert_eq!(imbalance(&p), 1);
        assert_eq!(imbalance(&TreePair::identity()), 0);
        assert_eq!(difference_roots(&p), ws("0"));
    }
}
