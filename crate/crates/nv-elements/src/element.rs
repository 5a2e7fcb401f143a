use std::fmt;

use cantor_core::{Brick, Pattern, PatternError, Point};

/// An element of the group `nV`: a pair of equally sized numbered patterns of
/// the Cantor cube `C^n`. The element is the homeomorphism taking domain
/// brick `i` onto range brick `i` by prefix replacement — the map that is
/// affine and orientation-preserving in every coordinate.
///
/// The same homeomorphism has many pattern-pair representatives (any paired
/// split refines one into another); [`equals`] decides equality of the
/// underlying maps, not of representatives.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    domain: Pattern,
    range: Pattern,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} => {:?}", self.domain, self.range)
    }
}

/// Why two patterns fail to form an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementError {
    DimMismatch,
    CountMismatch,
    BadPattern(PatternError),
}

impl fmt::Display for ElementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementError::DimMismatch => write!(f, "domain and range dimensions differ"),
            ElementError::CountMismatch => write!(f, "domain and range brick counts differ"),
            ElementError::BadPattern(e) => write!(f, "invalid pattern: {e}"),
        }
    }
}

impl std::error::Error for ElementError {}

impl Element {
    /// Pairs two patterns brick-by-brick (brick `i` maps to brick `i`).
    pub fn new(domain: Pattern, range: Pattern) -> Result<Element, ElementError> {
        domain.validate().map_err(ElementError::BadPattern)?;
        range.validate().map_err(ElementError::BadPattern)?;
        if domain.dim() != range.dim() {
            return Err(ElementError::DimMismatch);
        }
        if domain.len() != range.len() {
            return Err(ElementError::CountMismatch);
        }
        Ok(Element { domain, range })
    }

    /// The identity of `nV` on the trivial pattern.
    pub fn identity(dim: usize) -> Element {
        Element { domain: Pattern::trivial(dim), range: Pattern::trivial(dim) }
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    /// Number of brick pairs in this representative.
    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &Pattern {
        &self.domain
    }

    pub fn range(&self) -> &Pattern {
        &self.range
    }

    /// Image of the point `x`: locate the domain brick containing `x`, strip
    /// its prefix coordinatewise, prepend the paired range brick's prefix.
    pub fn apply(&self, x: &Point) -> Point {
        assert_eq!(self.dim(), x.dim(), "point dimension mismatch");
        let i = self.domain.brick_containing(x);
        x.strip_brick(self.domain.brick(i))
            .unwrap()
            .prepend_brick(self.range.brick(i))
    }

    /// The inverse element: the same pattern pair read backwards.
    pub fn invert(&self) -> Element {
        Element { domain: self.range.clone(), range: self.domain.clone() }
    }

    /// True iff this representative is the identity map, which happens
    /// exactly when every domain brick equals its paired range brick (the
    /// identity restricted to a brick has that same brick as image).
    pub fn is_identity(&self) -> bool {
        self.domain == self.range
    }

    /// Decides whether two elements are the same homeomorphism.
    pub fn equals(&self, other: &Element) -> bool {
        self.dim() == other.dim() && compose(self, &other.invert()).is_identity()
    }

    /// Splits domain brick `i` and range brick `i` along the same axis,
    /// producing a finer representative of the same element.
    pub fn refine(&self, i: usize, axis: usize) -> Element {
        Element {
            domain: self.domain.split(i, axis),
            range: self.range.split(i, axis),
        }
    }

    /// Coarsest-available representative: repeatedly merges a pair of domain
    /// bricks that are siblings along some axis whose paired range bricks are
    /// siblings along the *same* axis with the same 0/1 orientation — the
    /// only merges compatible with per-brick affinity. Scans lowest domain
    /// index first and repeats to a fixpoint, so the result is deterministic;
    /// only equality with the input is guaranteed, not canonicity.
    pub fn reduce(&self) -> Element {
        let mut dom: Vec<Brick> = self.domain.bricks().to_vec();
        let mut ran: Vec<Brick> = self.range.bricks().to_vec();
        'scan: loop {
            for i in 0..dom.len() {
                for axis in 0..dom[i].dim() {
                    // Drive merges from the 0 half so orientation matching
                    // ("0 half maps to 0 half") is checked exactly once.
                    if dom[i].word(axis).last() != Some(0)
                        || ran[i].word(axis).last() != Some(0)
                    {
                        continue;
                    }
                    let dom_sibling = dom[i].sibling_along(axis).unwrap();
                    let Some(j) = dom.iter().position(|b| *b == dom_sibling) else {
                        continue;
                    };
                    if ran[j] != ran[i].sibling_along(axis).unwrap() {
                        continue;
                    }
                    dom[i] = dom[i].parent_along(axis).unwrap();
                    ran[i] = ran[i].parent_along(axis).unwrap();
                    dom.remove(j);
                    ran.remove(j);
                    continue 'scan;
                }
            }
            break;
        }
        Element {
            domain: Pattern::from_partition(dom),
            range: Pattern::from_partition(ran),
        }
    }
}

/// The composite `g ∘ f` (apply `f` first).
///
/// Every brick of the common refinement of `f.range` and `g.domain` is pulled
/// back through `f` (strip the range prefix, prepend the domain prefix) and
/// pushed forward through `g`; the resulting pairs, enumerated refinement
/// brick by refinement brick, form the composite's pattern pair.
pub fn compose(g: &Element, f: &Element) -> Element {
    assert_eq!(g.dim(), f.dim(), "element dimension mismatch");
    let mut dom = Vec::new();
    let mut ran = Vec::new();
    for i in 0..f.size() {
        let mid_f = f.range.brick(i);
        for j in 0..g.size() {
            let mid_g = g.domain.brick(j);
            let Some(common) = mid_f.intersection(mid_g) else { continue };
            dom.push(common.relative_to(mid_f).unwrap().prefixed_by(f.domain.brick(i)));
            ran.push(common.relative_to(mid_g).unwrap().prefixed_by(g.range.brick(j)));
        }
    }
    Element {
        domain: Pattern::from_partition(dom),
        range: Pattern::from_partition(ran),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::random_element;
    use cantor_core::corpus_rng;
    use proptest::prelude::*;

    fn el(domain: &str, range: &str) -> Element {
        Element::new(domain.parse().unwrap(), range.parse().unwrap()).unwrap()
    }

    fn baker() -> Element {
        el("0,e|1,e", "e,0|e,1")
    }

    fn pt(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn mismatched_counts_are_rejected() {
        let d: Pattern = "0,e|1,0|1,1".parse().unwrap();
        let r: Pattern = "0,e|1,e".parse().unwrap();
        assert_eq!(Element::new(d, r), Err(ElementError::CountMismatch));
    }

    #[test]
    fn identity_fixes_points() {
        let x = pt("01(10);(0)");
        assert_eq!(Element::identity(2).apply(&x), x);
    }

    #[test]
    fn baker_map_shifts_the_leading_bit_across() {
        // The first coordinate loses its leading bit, which is prepended to
        // the second coordinate.
        let x = pt("01(10);(10)");
        assert_eq!(baker().apply(&x), pt("1(10);0(10)"));
    }

    #[test]
    fn vee_generator_strips_one_zero() {
        // Domain 00|01|1 → range 0|10|11 in dimension 1.
        let a0 = el("00|01|1", "0|10|11");
        assert_eq!(a0.apply(&pt("00(1)")), pt("0(1)"));
        assert_eq!(a0.apply(&pt("01(0)")), pt("10(0)"));
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let b = baker();
        assert!(compose(&b, &b.invert()).is_identity());
        assert!(!b.is_identity());
    }

    #[test]
    fn double_baker_shifts_two_bits() {
        let bb = compose(&baker(), &baker());
        let x = pt("011(10);(10)");
        assert_eq!(bb.apply(&x), pt("1(10);10(10)"));
    }

    #[test]
    fn equals_ignores_representative_refinement() {
        let a0 = el("00|01|1", "0|10|11");
        let finer = a0.refine(1, 0);
        assert_ne!(a0, finer);
        assert!(a0.equals(&finer));
        assert!(!a0.equals(&a0.invert()));
    }

    #[test]
    fn reduce_undoes_a_paired_refinement() {
        let a0 = el("00|01|1", "0|10|11");
        assert_eq!(a0.refine(2, 0).reduce(), a0);
        assert_eq!(a0.refine(0, 0).reduce(), a0);
    }

    #[test]
    fn reduce_collapses_deep_identity() {
        // Depth-3 one-dimensional identity: 8 bricks paired with themselves.
        let mut id = Element::identity(1);
        for _ in 0..3 {
            for i in (0..id.size()).rev() {
                id = id.refine(i, 0);
            }
        }
        assert_eq!(id.size(), 8);
        assert_eq!(id.reduce(), Element::identity(1));

        // A full 4×4 grid in dimension 2 collapses as well.
        let mut grid = Element::identity(2);
        for axis in [0, 1, 0, 1] {
            for i in (0..grid.size()).rev() {
                grid = grid.refine(i, axis);
            }
        }
        assert_eq!(grid.size(), 16);
        assert_eq!(grid.reduce(), Element::identity(2));
    }

    #[test]
    fn mixed_axis_sibling_images_do_not_merge() {
        // The baker's map: domain bricks are axis-0 siblings but their images
        // are axis-1 siblings, so the pair must survive reduce (the merged
        // map would not be affine).
        assert_eq!(baker().reduce(), baker());
    }

    #[test]
    fn second_axis_sibling_pairs_still_merge() {
        // Both bricks are 0-children along axis 0 as well; the merge is along
        // axis 1 and must be found anyway.
        let f = el("0,0|0,1|1,e", "0,0|0,1|1,e");
        assert_eq!(f.reduce(), Element::identity(2));
    }

    proptest! {
        // Oracle: composition agrees with pointwise application.
        #[test]
        fn compose_agrees_with_apply(seed in 0u64..40, dim in 1usize..3) {
            let mut rng = corpus_rng(1000 + seed);
            let f = random_element(&mut rng, dim, 6);
            let g = random_element(&mut rng, dim, 6);
            let gf = compose(&g, &f);
            let x = crate::corpus::random_point(&mut rng, dim);
            prop_assert_eq!(gf.apply(&x), g.apply(&f.apply(&x)));
        }

        #[test]
        fn reduce_preserves_the_element(seed in 0u64..40) {
            let mut rng = corpus_rng(2000 + seed);
            let f = random_element(&mut rng, 2, 8);
            prop_assert!(f.reduce().equals(&f));
        }
    }
}
