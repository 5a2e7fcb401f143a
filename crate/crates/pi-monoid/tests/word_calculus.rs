//! Randomized cross-checks tying the word calculus to the sequence algebra:
//! evaluation is a homomorphism, rewriting preserves value, the
//! pattern-to-word encoder round-trips, and the relation catalogue holds.

use cantor_core::{corpus_rng, Pattern};
use pi_monoid::{
    eval_word, is_pq_shape, multiply, pattern_to_pq, pi0_sequence, relation_instances,
    rewrite_to_pq, MonoidLetter, MonoidWord,
};
use rand::seq::SliceRandom;
use rand::Rng;

fn random_word(rng: &mut impl Rng, max_len: usize, max_index: usize) -> MonoidWord {
    let len = rng.random_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let index = rng.random_range(0..=max_index);
            match rng.random_range(0..3) {
                0 => MonoidLetter::V(index),
                1 => MonoidLetter::H(index),
                _ => MonoidLetter::S(index),
            }
        })
        .collect();
    MonoidWord::new(letters)
}

fn random_numbered_pattern(rng: &mut impl Rng, max_splits: usize) -> Pattern {
    let mut p = Pattern::trivial(2);
    let splits = rng.random_range(1..=max_splits);
    for _ in 0..splits {
        let i = rng.random_range(0..p.len());
        let axis = rng.random_range(0..2);
        p = p.split(i, axis);
    }
    let mut bricks = p.bricks().to_vec();
    bricks.shuffle(rng);
    Pattern::from_partition(bricks)
}

#[test]
fn evaluation_turns_concatenation_into_multiplication() {
    let mut rng = corpus_rng(20);
    for _ in 0..200 {
        let u = random_word(&mut rng, 8, 5);
        let v = random_word(&mut rng, 8, 5);
        assert_eq!(
            eval_word(&u.concat(&v)),
            multiply(&eval_word(&u), &eval_word(&v)),
            "u = {u}, v = {v}"
        );
    }
}

#[test]
fn rewriting_sorts_letters_without_changing_the_value() {
    let mut rng = corpus_rng(21);
    for _ in 0..500 {
        let w = random_word(&mut rng, 10, 5);
        let out = rewrite_to_pq(&w);
        assert!(is_pq_shape(&out), "{w} rewrote to unsorted {out}");
        assert_eq!(eval_word(&out), eval_word(&w), "value changed for {w}");
        assert_eq!(rewrite_to_pq(&out), out, "rewrite not idempotent on {out}");
    }
}

#[test]
fn encoded_patterns_rebuild_their_numbered_square() {
    let mut rng = corpus_rng(22);
    for _ in 0..500 {
        let p = random_numbered_pattern(&mut rng, 8);
        let word = pattern_to_pq(&p).expect("flat patterns always have a cut tree");
        assert!(is_pq_shape(&word));
        let value = eval_word(&word);
        assert!(value.in_pi0(), "{word} divides squares past 0");
        assert_eq!(value, pi0_sequence(&p), "{word} does not rebuild {p}");
        // Every prefix of the split half stays inside square 0: the j-th
        // split letter addresses a number at most j.
        for (j, letter) in word.letters().iter().filter(|l| l.is_split()).enumerate() {
            assert!(letter.index() <= j);
        }
    }
}

#[test]
fn defining_relations_hold_for_all_indices_up_to_five() {
    let instances = relation_instances(5);
    assert!(instances.len() > 100);
    for instance in instances {
        assert!(
            instance.holds(),
            "family {} indices {:?} failed: {} vs {}",
            instance.family,
            instance.indices,
            instance.lhs,
            instance.rhs
        );
    }
}
