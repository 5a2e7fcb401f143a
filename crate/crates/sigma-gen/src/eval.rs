use cantor_core::Pattern;
use nv_elements::{compose, Element};
use pi_monoid::{eval_word, MonoidLetter, MonoidWord};

use crate::letter::{SigmaBase, SigmaLetter, SigmaWord};

/// The element carrying the numbered square-0 decomposition of `b` onto that
/// of `a` (number `i` to number `i`); both words must divide only square 0.
pub fn pair_element(a: &MonoidWord, b: &MonoidWord) -> Element {
    let range = pi0_pattern(a);
    let domain = pi0_pattern(b);
    Element::new(domain, range).expect("defining pairs divide square 0 alike")
}

fn pi0_pattern(word: &MonoidWord) -> Pattern {
    let value = eval_word(word);
    let bricks = value
        .pi0_bricks()
        .expect("defining words divide only square 0");
    Pattern::from_partition(bricks)
}

fn splits(letter: fn(usize) -> MonoidLetter, index: usize, count: usize) -> Vec<MonoidLetter> {
    std::iter::repeat(letter(index)).take(count).collect()
}

/// The defining word pair of a positive generator letter.
pub fn defining_pair(base: SigmaBase, i: usize) -> (MonoidWord, MonoidWord) {
    use MonoidLetter::{H, S, V};
    let v0 = |count| splits(V, 0, count);
    let (mut a, b) = match base {
        SigmaBase::A => (v0(i + 1), v0(i + 2)),
        SigmaBase::B => (v0(i + 1), v0(i + 2)),
        SigmaBase::C => (v0(i), v0(i + 1)),
        SigmaBase::Pi => (v0(i + 2), v0(i + 2)),
        SigmaBase::PiBar => (v0(i + 1), v0(i + 1)),
    };
    match base {
        SigmaBase::A => a.push(V(1)),
        SigmaBase::B => a.push(H(1)),
        SigmaBase::C => a.push(H(0)),
        SigmaBase::Pi => a.push(S(1)),
        SigmaBase::PiBar => a.push(S(0)),
    }
    (MonoidWord::new(a), MonoidWord::new(b))
}

/// The element a single generator letter stands for.
pub fn letter_element(letter: &SigmaLetter) -> Element {
    let (a, b) = defining_pair(letter.base, letter.index);
    let element = pair_element(&a, &b);
    if letter.inverse {
        element.invert()
    } else {
        element
    }
}

/// Evaluates a generator word to an element: letters act as maps composed
/// from right to left, so the word `x y` is the map `x ∘ y`.
pub fn eval_sigma(word: &SigmaWord) -> Element {
    let mut acc = Element::identity(2);
    for letter in word.letters() {
        acc = compose(&acc, &letter_element(letter)).reduce();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn eval(text: &str) -> Element {
        eval_sigma(&SigmaWord::from_str(text).unwrap())
    }

    #[test]
    fn c0_is_the_bit_shuffling_square_map() {
        let baker = Element::new(
            "0,e|1,e".parse().unwrap(),
            "e,0|e,1".parse().unwrap(),
        )
        .unwrap();
        assert!(eval("C0").equals(&baker));
    }

    #[test]
    fn permutation_letters_are_involutions() {
        for text in ["p0 p0", "p3 p3", "q0 q0", "q5 q5"] {
            assert!(eval(text).is_identity(), "{text} is not an involution");
        }
    }

    #[test]
    fn letters_cancel_with_their_inverses() {
        for text in ["A0 A0'", "B2' B2", "C1 C1'", "p1' p1", "q3 q3'"] {
            assert!(eval(text).is_identity(), "{text} did not cancel");
        }
    }

    #[test]
    fn a0_shifts_prefixes_in_the_first_coordinate_only() {
        // A0 carries strips 00, 01, 1 to 0, 10, 11 in coordinate 0.
        let expected = Element::new(
            "00,e|01,e|1,e".parse().unwrap(),
            "0,e|10,e|11,e".parse().unwrap(),
        )
        .unwrap();
        assert!(eval("A0").equals(&expected));
    }

    #[test]
    fn evaluation_applies_the_rightmost_letter_first() {
        // C0 then A0 (word "A0 C0") differs from A0 then C0 ("C0 A0").
        let ac = eval("A0 C0");
        let ca = eval("C0 A0");
        assert!(!ac.equals(&ca));
        // Spot-check on a point where the two orders disagree.
        let x = "010(0);(0)".parse().unwrap();
        let c0_first = eval("A0").apply(&eval("C0").apply(&x));
        assert_eq!(ac.apply(&x), c0_first);
        assert_ne!(ca.apply(&x), c0_first);
    }

    #[test]
    fn higher_index_letters_act_deeper_in_the_first_strip() {
        // C1 carries the strips 00, 01, 1 to 00-then-halved cells: its
        // defining pair divides square 0 as (v0 h0) against (v0 v0).
        let c1 = eval("C1");
        assert_eq!(c1.domain().to_string(), "00,e|01,e|1,e");
        assert_eq!(c1.range().to_string(), "0,0|0,1|1,e");
    }
}
