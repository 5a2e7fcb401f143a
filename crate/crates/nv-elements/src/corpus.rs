use rand::seq::SliceRandom;
use rand::Rng;

use cantor_core::{Pattern, Point, PointCoord, Word};

use crate::Element;

/// A pattern built from `splits` half-splits at uniformly random bricks and
/// axes.
pub fn random_pattern(rng: &mut impl Rng, dim: usize, splits: usize) -> Pattern {
    let mut p = Pattern::trivial(dim);
    for _ in 0..splits {
        let i = rng.random_range(0..p.len());
        let axis = rng.random_range(0..dim);
        p = p.split(i, axis);
    }
    p
}

/// A random element of `nV`: two independently random patterns with the same
/// number of splits (drawn from `1..=max_splits`), glued by a uniformly
/// random numbering of the range bricks.
pub fn random_element(rng: &mut impl Rng, dim: usize, max_splits: usize) -> Element {
    let splits = rng.random_range(1..=max_splits);
    let domain = random_pattern(rng, dim, splits);
    let range = random_pattern(rng, dim, splits);
    let mut order: Vec<usize> = (0..range.len()).collect();
    order.shuffle(rng);
    let permuted = Pattern::from_partition(order.iter().map(|&i| range.brick(i).clone()).collect());
    Element::new(domain, permuted).expect("equal split counts give equal brick counts")
}

/// A random eventually periodic point: each coordinate gets a random
/// preperiod of length ≤ 4 and period of length ≤ 4.
pub fn random_point(rng: &mut impl Rng, dim: usize) -> Point {
    let coords = (0..dim)
        .map(|_| {
            let pre_len = rng.random_range(0..=4);
            let per_len = rng.random_range(1..=4);
            let pre = Word::from_bits((0..pre_len).map(|_| rng.random_range(0..2) as u8));
            let per = Word::from_bits((0..per_len).map(|_| rng.random_range(0..2) as u8));
            PointCoord::new(pre, per)
        })
        .collect();
    Point::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cantor_core::corpus_rng;

    #[test]
    fn random_elements_are_valid_and_reproducible() {
        let mut a = corpus_rng(42);
        let mut b = corpus_rng(42);
        for _ in 0..20 {
            let fa = random_element(&mut a, 2, 10);
            let fb = random_element(&mut b, 2, 10);
            assert_eq!(fa.domain(), fb.domain());
            assert_eq!(fa.range(), fb.range());
            assert!(fa.domain().is_valid() && fa.range().is_valid());
        }
    }

    #[test]
    fn random_points_lie_in_exactly_one_brick_of_a_pattern() {
        let mut rng = corpus_rng(43);
        let p = random_pattern(&mut rng, 2, 9);
        for _ in 0..50 {
            let x = random_point(&mut rng, 2);
            let hits = p.bricks().iter().filter(|b| x.starts_with(b)).count();
            assert_eq!(hits, 1);
        }
    }
}
