//! Finite shift orbits: enumeration of aperiodic necklaces and the square
//! element realizing the two-sided shift.

use crate::point::TwoSidedPoint;
use cantor_core::{Brick, Pattern, Word};
use nv_elements::Element;

/// The baker's map on the square: the element halving the first coordinate
/// and doubling the second, `(0u, v) -> (u, 0v)` and `(1u, v) -> (u, 1v)`.
pub fn bakers_map() -> Element {
    let e = Word::empty();
    let zero = Word::from_bits([0]);
    let one = Word::from_bits([1]);
    let domain = Pattern::from_partition(vec![
        Brick::new(vec![zero.clone(), e.clone()]),
        Brick::new(vec![one.clone(), e.clone()]),
    ]);
    let range = Pattern::from_partition(vec![
        Brick::new(vec![e.clone(), zero]),
        Brick::new(vec![e, one]),
    ]);
    Element::new(domain, range).expect("matching two-brick patterns")
}

fn word_of_mask(mask: usize, len: usize) -> Word {
    Word::from_bits((0..len).map(|i| ((mask >> (len - 1 - i)) & 1) as u8))
}

fn is_least_rotation(w: &Word) -> bool {
    let n = w.len();
    (1..n).all(|k| {
        let rotated = w.rotate_left_by(k);
        *w <= rotated
    })
}

/// All shift orbits of size exactly `p`: one purely periodic point per
/// aperiodic binary necklace of length `p`, each presented by the
/// lexicographically least rotation, in ascending order.
pub fn enumerate_periodic_orbits(p: usize) -> Vec<TwoSidedPoint> {
    assert!(p >= 1, "orbit size must be positive");
    let mut out = Vec::new();
    for mask in 0..(1usize << p) {
        let w = word_of_mask(mask, p);
        if w.primitive_root().len() == p && is_least_rotation(&w) {
            out.push(TwoSidedPoint::periodic(&w).expect("p >= 1"));
        }
    }
    out
}

fn mobius(mut n: u64) -> i64 {
    let mut mu = 1i64;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Independent count of aperiodic binary necklaces of length `p` by the
/// divisor-sum formula `(1/p) Σ_{d|p} μ(d) 2^{p/d}`, used to cross-check
/// the brute-force enumeration.
pub fn aperiodic_necklace_count(p: u64) -> u64 {
    assert!(p >= 1 && p <= 32, "count oracle supports 1..=32");
    let total: i64 = (1..=p)
        .filter(|d| p % d == 0)
        .map(|d| mobius(d) * (1i64 << (p / d)))
        .sum();
    (total as u64) / p
}
