use cantor_core::Pattern;
use nv_elements::Element;
use pi_monoid::{pattern_to_pq, MonoidLetter};

use crate::letter::{SigmaLetter, SigmaWord};

/// The generator word carrying the evenly-cut strip decomposition onto the
/// given numbered decomposition of the unit square (brick `i` numbered `i`).
///
/// The pattern is first encoded as a split-then-swap monoid word via
/// [`pattern_to_pq`]; each monoid letter then contributes one generator (or
/// none), where `j` counts the split letters already processed and `k` is
/// the total number of splits:
///
/// * `v0` → nothing, `v_m` → `A_{j−m}`, `h_0` → `C_j`, `h_m` → `B_{j−m}`;
/// * `s_0` → `q_{k−1}` (the deep swap), `s_m` → `p_{k−1−m}` otherwise.
pub fn pattern_word(pattern: &Pattern) -> SigmaWord {
    let monoid_word =
        pattern_to_pq(pattern).expect("flat two-dimensional patterns always have a cut tree");
    let total_splits = pattern.len() - 1;
    let mut out = SigmaWord::empty();
    let mut splits_done = 0;
    for letter in monoid_word.letters() {
        match *letter {
            MonoidLetter::V(0) => {}
            MonoidLetter::V(m) => out.push(SigmaLetter::a(splits_done - m)),
            MonoidLetter::H(0) => out.push(SigmaLetter::c(splits_done)),
            MonoidLetter::H(m) => out.push(SigmaLetter::b(splits_done - m)),
            MonoidLetter::S(0) => out.push(SigmaLetter::pibar(total_splits - 1)),
            MonoidLetter::S(m) => out.push(SigmaLetter::pi(total_splits - 1 - m)),
        }
        if letter.is_split() {
            splits_done += 1;
        }
    }
    out
}

/// Writes an element as a generator word: the word for its numbered range
/// decomposition followed by the inverse of the word for its domain.
/// Evaluating the result recovers the element.
pub fn decompose(f: &Element) -> SigmaWord {
    assert_eq!(f.dim(), 2, "generator words describe square maps");
    let range_word = pattern_word(f.range());
    let domain_word = pattern_word(f.domain());
    range_word.concat(&domain_word.inverse())
}
