use cantor_core::{guillotine_decompose, Brick, Pattern, SplitTree};

use crate::letter::{MonoidLetter, MonoidWord};

/// Encodes a numbered decomposition of the unit square (brick `i` numbered
/// `i`) as a split-then-swap word whose evaluation divides square 0 into
/// exactly that numbered decomposition.
///
/// The split half replays the cut tree of the pattern, always expanding the
/// lowest-positioned still-divided region; splitting position `i` of a list
/// of regions is the letter `V(i)`/`H(i)` by cut axis.  Because region `i`
/// exists only after at least `i` earlier splits, every prefix of the split
/// half only ever divides square 0.  The swap half then bubble-sorts the
/// replay numbering into the target numbering.
///
/// Fails with the offending region if the pattern admits no cut tree; this
/// cannot happen in dimension ≤ 2.
pub fn pattern_to_pq(pattern: &Pattern) -> Result<MonoidWord, Brick> {
    assert!(
        pattern.dim() <= 2,
        "split letters only cover the first two axes"
    );
    let tree = guillotine_decompose(pattern)?;
    let mut word = MonoidWord::empty();
    let mut regions: Vec<&SplitTree> = vec![&tree];
    loop {
        let Some(i) = regions
            .iter()
            .position(|r| matches!(r, SplitTree::Split { .. }))
        else {
            break;
        };
        let SplitTree::Split { axis, low, high } = regions[i] else {
            unreachable!();
        };
        word.push(match axis {
            0 => MonoidLetter::V(i),
            _ => MonoidLetter::H(i),
        });
        regions[i] = low;
        regions.insert(i + 1, high);
    }
    // After the replay, position p holds the brick whose target number is
    // leaf_order[p]; sort the tags into place by adjacent swaps.
    let mut numbering = tree.leaf_order();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 0..numbering.len().saturating_sub(1) {
            if numbering[i] > numbering[i + 1] {
                numbering.swap(i, i + 1);
                word.push(MonoidLetter::S(i));
                sorted = false;
            }
        }
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::is_pq_shape;
    use crate::sequence::{eval_word, pi0_sequence};
    use proptest::prelude::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_pattern_needs_no_letters() {
        assert_eq!(
            pattern_to_pq(&Pattern::trivial(2)).unwrap(),
            MonoidWord::empty()
        );
    }

    #[test]
    fn halving_vertically_is_a_single_letter() {
        assert_eq!(
            pattern_to_pq(&pat("0,e|1,e")).unwrap().to_string(),
            "v0"
        );
    }

    #[test]
    fn quadrants_in_row_order_need_no_swaps() {
        assert_eq!(
            pattern_to_pq(&pat("0,0|0,1|1,0|1,1")).unwrap().to_string(),
            "v0 h0 h2"
        );
    }

    #[test]
    fn scrambled_numbering_appends_bubble_sort_swaps() {
        let p = pat("0,1|1,e|0,0");
        let word = pattern_to_pq(&p).unwrap();
        assert_eq!(word.to_string(), "v0 h0 s0 s1");
        assert_eq!(eval_word(&word), pi0_sequence(&p));
    }

    #[test]
    fn split_positions_never_exceed_the_split_count_so_far() {
        let p = pat("e,0|1,1|0,10|0,11");
        let word = pattern_to_pq(&p).unwrap();
        for (j, letter) in word
            .letters()
            .iter()
            .filter(|l| l.is_split())
            .enumerate()
        {
            assert!(letter.index() <= j, "split {j} at position {letter}");
        }
    }

    proptest! {
        // Oracle: the emitted word rebuilds exactly the numbered pattern it
        // was derived from, and is already in split-then-swap shape.
        #[test]
        fn random_split_patterns_round_trip(
            steps in proptest::collection::vec((0usize..64, 0usize..2), 0..9),
            shuffle in proptest::collection::vec(0usize..64, 0..8),
        ) {
            let mut p = Pattern::trivial(2);
            for (i, axis) in steps {
                let i = i % p.len();
                p = p.split(i, axis);
            }
            // Scramble the numbering by applying transpositions.
            let mut bricks = p.bricks().to_vec();
            for s in shuffle {
                let n = bricks.len();
                bricks.swap(s % n, (s + 1) % n);
            }
            let p = Pattern::from_partition(bricks);
            let word = pattern_to_pq(&p).unwrap();
            prop_assert!(is_pq_shape(&word));
            prop_assert_eq!(eval_word(&word), pi0_sequence(&p));
        }
    }
}
