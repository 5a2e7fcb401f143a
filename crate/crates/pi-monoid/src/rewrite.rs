use crate::letter::{MonoidLetter, MonoidWord};

/// True when all split letters precede all swap letters.
pub fn is_pq_shape(word: &MonoidWord) -> bool {
    let first_swap = word
        .letters()
        .iter()
        .position(|l| !l.is_split())
        .unwrap_or(word.len());
    word.letters()[first_swap..].iter().all(|l| !l.is_split())
}

/// Splits a word in split-then-swap shape into its two halves; `None` if a
/// split letter occurs after a swap.
pub fn pq_parts(word: &MonoidWord) -> Option<(MonoidWord, MonoidWord)> {
    if !is_pq_shape(word) {
        return None;
    }
    let first_swap = word
        .letters()
        .iter()
        .position(|l| !l.is_split())
        .unwrap_or(word.len());
    Some((
        MonoidWord::new(word.letters()[..first_swap].to_vec()),
        MonoidWord::new(word.letters()[first_swap..].to_vec()),
    ))
}

/// Rewrites a word into an equal-evaluating word with every split letter
/// before every swap letter.
///
/// Repeatedly takes the leftmost swap-then-split adjacency `s_j x_i` and
/// replaces it by the matching identity:
///
/// * `i < j`      → `x_i s_{j+1}`
/// * `i = j`      → `x_{j+1} s_j s_{j+1}`
/// * `i = j + 1`  → `x_j s_{j+1} s_j`
/// * `i > j + 1`  → `x_i s_j`
///
/// Each step moves the leftmost out-of-place split letter one position left,
/// so the procedure terminates.
pub fn rewrite_to_pq(word: &MonoidWord) -> MonoidWord {
    let mut letters = word.letters().to_vec();
    loop {
        let adjacency = letters
            .windows(2)
            .position(|w| !w[0].is_split() && w[1].is_split());
        let Some(p) = adjacency else { break };
        let j = letters[p].index();
        let x = letters[p + 1];
        let i = x.index();
        let replacement = if i < j {
            vec![x, MonoidLetter::S(j + 1)]
        } else if i == j {
            vec![
                x.split_at(j + 1),
                MonoidLetter::S(j),
                MonoidLetter::S(j + 1),
            ]
        } else if i == j + 1 {
            vec![
                x.split_at(j),
                MonoidLetter::S(j + 1),
                MonoidLetter::S(j),
            ]
        } else {
            vec![x, MonoidLetter::S(j)]
        };
        letters.splice(p..p + 2, replacement);
    }
    MonoidWord::new(letters)
}
