use crate::letter::{MonoidLetter, MonoidWord};
use crate::sequence::eval_word;

/// One concrete instance of a defining monoid relation: two words claimed to
/// evaluate to the same sequence, tagged by family for reporting.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub family: &'static str,
    pub indices: Vec<usize>,
    pub lhs: MonoidWord,
    pub rhs: MonoidWord,
}

impl RelationInstance {
    fn new(
        family: &'static str,
        indices: Vec<usize>,
        lhs: Vec<MonoidLetter>,
        rhs: Vec<MonoidLetter>,
    ) -> RelationInstance {
        RelationInstance {
            family,
            indices,
            lhs: MonoidWord::new(lhs),
            rhs: MonoidWord::new(rhs),
        }
    }

    pub fn holds(&self) -> bool {
        check_monoid_relation(&self.lhs, &self.rhs)
    }
}

/// True iff both words act identically on the trivial sequence (which
/// determines them as monoid elements).
pub fn check_monoid_relation(lhs: &MonoidWord, rhs: &MonoidWord) -> bool {
    eval_word(lhs) == eval_word(rhs)
}

const SPLIT_KINDS: [fn(usize) -> MonoidLetter; 2] = [MonoidLetter::V, MonoidLetter::H];

/// Every defining-relation instance with all enumerated indices `≤ max_index`.
///
/// Families:
/// * `1`  — `x_j y_i = y_i x_{j+1}` for `i < j`, both letters splits;
/// * `2a` — `s_i s_i = 1`;
/// * `2b` — `s_i s_j = s_j s_i` for `|i − j| ≥ 2`;
/// * `2c` — `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`;
/// * `3`  — the four swap-past-split identities (see `rewrite_to_pq`);
/// * `4`  — `v_i h_{i+1} h_i = h_i v_{i+1} v_i s_{i+1}`.
pub fn relation_instances(max_index: usize) -> Vec<RelationInstance> {
    use MonoidLetter::S;
    let mut out = Vec::new();
    for x in SPLIT_KINDS {
        for y in SPLIT_KINDS {
            for j in 0..=max_index {
                for i in 0..j {
                    out.push(RelationInstance::new(
                        "1",
                        vec![i, j],
                        vec![x(j), y(i)],
                        vec![y(i), x(j + 1)],
                    ));
                }
            }
        }
    }
    for i in 0..=max_index {
        out.push(RelationInstance::new("2a", vec![i], vec![S(i), S(i)], vec![]));
    }
    for i in 0..=max_index {
        for j in (i + 2)..=max_index {
            out.push(RelationInstance::new(
                "2b",
                vec![i, j],
                vec![S(i), S(j)],
                vec![S(j), S(i)],
            ));
        }
    }
    for i in 0..max_index {
        out.push(RelationInstance::new(
            "2c",
            vec![i],
            vec![S(i), S(i + 1), S(i)],
            vec![S(i + 1), S(i), S(i + 1)],
        ));
    }
    for x in SPLIT_KINDS {
        for j in 0..=max_index {
            for i in 0..=max_index {
                let rhs = if i < j {
                    vec![x(i), S(j + 1)]
                } else if i == j {
                    vec![x(j + 1), S(j), S(j + 1)]
                } else if i == j + 1 {
                    vec![x(j), S(j + 1), S(j)]
                } else {
                    vec![x(i), S(j)]
                };
                out.push(RelationInstance::new("3", vec![i, j], vec![S(j), x(i)], rhs));
            }
        }
    }
    for i in 0..=max_index {
        out.push(RelationInstance::new(
            "4",
            vec![i],
            vec![MonoidLetter::V(i), MonoidLetter::H(i + 1), MonoidLetter::H(i)],
            vec![
                MonoidLetter::H(i),
                MonoidLetter::V(i + 1),
                MonoidLetter::V(i),
                S(i + 1),
            ],
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn word(text: &str) -> MonoidWord {
        MonoidWord::from_str(text).unwrap()
    }

    #[test]
    fn split_letters_commute_with_an_index_shift() {
        assert!(check_monoid_relation(&word("h2 v0"), &word("v0 h3")));
        assert!(!check_monoid_relation(&word("h2 v0"), &word("v0 h2")));
    }

    #[test]
    fn swap_squared_is_the_empty_word() {
        assert!(check_monoid_relation(&word("s0 s0"), &word("")));
    }

    #[test]
    fn swap_past_equal_split_matches_the_expansion() {
        assert!(check_monoid_relation(&word("s0 v0"), &word("v1 s0 s1")));
    }

    #[test]
    fn instance_families_are_complete_for_small_indices() {
        let instances = relation_instances(2);
        let count = |family: &str| instances.iter().filter(|r| r.family == family).count();
        // Family 1: 4 kind pairs × 3 index pairs (i<j≤2).
        assert_eq!(count("1"), 12);
        assert_eq!(count("2a"), 3);
        assert_eq!(count("2b"), 1); // only (0, 2)
        assert_eq!(count("2c"), 2);
        // Family 3: 2 kinds × 9 index pairs.
        assert_eq!(count("3"), 18);
        assert_eq!(count("4"), 3);
    }

    #[test]
    fn all_small_instances_hold() {
        for instance in relation_instances(3) {
            assert!(
                instance.holds(),
                "family {} indices {:?}: {} vs {}",
                instance.family,
                instance.indices,
                instance.lhs,
                instance.rhs
            );
        }
    }

    #[test]
    fn perturbed_instances_fail() {
        // Shift one index off in each family and expect inequality.
        assert!(!check_monoid_relation(&word("v2 h1"), &word("h1 v2")));
        assert!(!check_monoid_relation(&word("s1 s1"), &word("s1")));
        assert!(!check_monoid_relation(&word("s0 v0"), &word("v1 s1 s0")));
        assert!(!check_monoid_relation(
            &word("v0 h1 h0"),
            &word("h0 v1 v0 s0")
        ));
    }
}
