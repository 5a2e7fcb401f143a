//! Brute-force orbit census over eventually periodic points.
//!
//! Enumerates all one-dimensional eventually periodic points with bounded
//! preperiodic and periodic parts, and measures orbit sizes by direct
//! iteration.  Used to cross-check periodic-orbit reports: the census must
//! never find a finite orbit larger than the reported maximum period, and
//! every reported isolated periodic point must show up with its exact
//! period.

use cantor_core::{Point, PointCoord, Word};
use nv_elements::Element;
use std::collections::BTreeSet;

fn all_words(len: usize) -> impl Iterator<Item = Word> {
    (0..(1usize << len)).map(move |mask| {
        Word::from_bits((0..len).map(|i| ((mask >> (len - 1 - i)) & 1) as u8))
    })
}

/// All distinct eventually periodic points `pre . per per per ...` with
/// `|pre| <= max_pre` and `1 <= |per| <= max_per`, deduplicated through
/// canonical form, in sorted order.
pub fn census_points(max_pre: usize, max_per: usize) -> Vec<Point> {
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    for pre_len in 0..=max_pre {
        for pre in all_words(pre_len) {
            for per_len in 1..=max_per {
                for per in all_words(per_len) {
                    seen.insert(Point::new(vec![PointCoord::new(pre.clone(), per)]));
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// The exact orbit size of `x` under `f` if it is at most `cap`, else `None`.
pub fn orbit_size(f: &Element, x: &Point, cap: usize) -> Option<usize> {
    let mut y = f.apply(x);
    for k in 1..=cap {
        if y == *x {
            return Some(k);
        }
        y = f.apply(&y);
    }
    None
}
