use std::fmt;

use crate::eval::eval_sigma;
use crate::letter::{SigmaLetter, SigmaWord};

/// Which of `A`/`B` a placeholder symbol stands for in a family instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symbol {
    A,
    B,
}

impl Symbol {
    pub const BOTH: [Symbol; 2] = [Symbol::A, Symbol::B];

    fn letter(&self, index: usize) -> SigmaLetter {
        match self {
            Symbol::A => SigmaLetter::a(index),
            Symbol::B => SigmaLetter::b(index),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::A => write!(f, "A"),
            Symbol::B => write!(f, "B"),
        }
    }
}

/// One fully instantiated relation: family number, concrete symbol and index
/// assignment, and the two sides as generator words.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: u8,
    pub assignment: String,
    pub lhs: SigmaWord,
    pub rhs: SigmaWord,
}

impl FamilyInstance {
    pub fn holds(&self) -> bool {
        eval_sigma(&self.lhs).equals(&eval_sigma(&self.rhs))
    }
}

/// A requested index assignment for `verify_family`; unused names are
/// ignored by families that do not mention them.
#[derive(Clone, Copy, Default, Debug)]
pub struct Indices {
    pub m: Option<usize>,
    pub q: Option<usize>,
}

/// Why a family cannot be instantiated at the requested indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    UnknownFamily(u8),
    MissingIndex(&'static str),
    SideCondition(&'static str),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::UnknownFamily(n) => write!(f, "no relation family numbered {n}"),
            FamilyError::MissingIndex(name) => write!(f, "family needs an index {name}"),
            FamilyError::SideCondition(cond) => {
                write!(f, "indices violate the side condition {cond}")
            }
        }
    }
}

impl std::error::Error for FamilyError {}

/// Which index names a family uses and its side condition.
fn family_shape(family: u8) -> Result<(bool, bool, &'static str), FamilyError> {
    // (uses_m, uses_q, side condition)
    Ok(match family {
        1 | 2 | 5 | 8 => (true, true, "m<q"),
        3 => (false, true, "q>=0"),
        4 | 10 => (true, true, "m>q+1"),
        12 => (true, true, "|m-q|>=2"),
        14 => (true, true, "q>=m+2"),
        6 | 7 | 9 | 11 | 13 | 15 | 16 | 17 => (true, false, "m>=0"),
        _ => return Err(FamilyError::UnknownFamily(family)),
    })
}

fn side_condition_met(family: u8, m: usize, q: usize) -> bool {
    match family {
        1 | 2 | 5 | 8 => m < q,
        4 | 10 => m > q + 1,
        12 => m.abs_diff(q) >= 2,
        14 => q >= m + 2,
        _ => true,
    }
}

/// How many placeholder symbols the family carries (0, 1, or 2).
fn symbol_count(family: u8) -> usize {
    match family {
        1 => 2,
        2 | 3 | 4 | 5 | 8 => 1,
        _ => 0,
    }
}

/// The two sides for one concrete instantiation.  `x` is the first (or
/// only) placeholder, `y` the second; both default to `A` when unused.
fn family_words(family: u8, x: Symbol, y: Symbol, m: usize, q: usize) -> (SigmaWord, SigmaWord) {
    use SigmaLetter as L;
    let (lhs, rhs): (Vec<SigmaLetter>, Vec<SigmaLetter>) = match family {
        1 => (
            vec![x.letter(q), y.letter(m)],
            vec![y.letter(m), x.letter(q + 1)],
        ),
        2 => (
            vec![L::pi(q), x.letter(m)],
            vec![x.letter(m), L::pi(q + 1)],
        ),
        3 => (
            vec![L::pi(q), x.letter(q)],
            vec![x.letter(q + 1), L::pi(q), L::pi(q + 1)],
        ),
        4 => (
            vec![L::pi(q), x.letter(m)],
            vec![x.letter(m), L::pi(q)],
        ),
        5 => (
            vec![L::pibar(q), x.letter(m)],
            vec![x.letter(m), L::pibar(q + 1)],
        ),
        6 => (
            vec![L::pibar(m), L::a(m)],
            vec![L::pi(m), L::pibar(m + 1)],
        ),
        7 => (
            vec![L::pibar(m), L::b(m)],
            vec![L::c(m + 1), L::pi(m), L::pibar(m + 1)],
        ),
        8 => (
            vec![L::c(q), x.letter(m)],
            vec![x.letter(m), L::c(q + 1)],
        ),
        9 => (
            vec![L::c(m), L::a(m)],
            vec![L::b(m), L::c(m + 2), L::pi(m + 1)],
        ),
        10 => (
            vec![L::pi(q), L::c(m)],
            vec![L::c(m), L::pi(q)],
        ),
        11 => (
            vec![L::a(m), L::b(m + 1), L::b(m)],
            vec![L::b(m), L::a(m + 1), L::a(m), L::pi(m + 1)],
        ),
        12 => (
            vec![L::pi(q), L::pi(m)],
            vec![L::pi(m), L::pi(q)],
        ),
        13 => (
            vec![L::pi(m), L::pi(m + 1), L::pi(m)],
            vec![L::pi(m + 1), L::pi(m), L::pi(m + 1)],
        ),
        14 => (
            vec![L::pibar(q), L::pi(m)],
            vec![L::pi(m), L::pibar(q)],
        ),
        15 => (
            vec![L::pi(m), L::pibar(m + 1), L::pi(m)],
            vec![L::pibar(m + 1), L::pi(m), L::pibar(m + 1)],
        ),
        16 => (vec![L::pi(m), L::pi(m)], vec![]),
        17 => (vec![L::pibar(m), L::pibar(m)], vec![]),
        _ => unreachable!("family_shape vets the family number"),
    };
    (SigmaWord::new(lhs), SigmaWord::new(rhs))
}

fn assignment_label(family: u8, x: Symbol, y: Symbol, m: usize, q: usize) -> String {
    let (uses_m, uses_q, _) = family_shape(family).expect("family vetted");
    let mut parts = Vec::new();
    match symbol_count(family) {
        2 => {
            parts.push(format!("X:{x}"));
            parts.push(format!("Y:{y}"));
        }
        1 => parts.push(format!("X:{x}")),
        _ => {}
    }
    if uses_m {
        parts.push(format!("m:{m}"));
    }
    if uses_q {
        parts.push(format!("q:{q}"));
    }
    parts.join(",")
}

fn instances_at(family: u8, m: usize, q: usize) -> Vec<FamilyInstance> {
    let combos: Vec<(Symbol, Symbol)> = match symbol_count(family) {
        2 => Symbol::BOTH
            .iter()
            .flat_map(|&x| Symbol::BOTH.iter().map(move |&y| (x, y)))
            .collect(),
        1 => Symbol::BOTH.iter().map(|&x| (x, Symbol::A)).collect(),
        _ => vec![(Symbol::A, Symbol::A)],
    };
    combos
        .into_iter()
        .map(|(x, y)| {
            let (lhs, rhs) = family_words(family, x, y, m, q);
            FamilyInstance {
                family,
                assignment: assignment_label(family, x, y, m, q),
                lhs,
                rhs,
            }
        })
        .collect()
}

/// Checks one family at one index assignment, across all of its placeholder
/// symbol choices.  `Ok(true)` only if every combination holds.
pub fn verify_family(family: u8, indices: Indices) -> Result<bool, FamilyError> {
    let (uses_m, uses_q, condition) = family_shape(family)?;
    let m = match (uses_m, indices.m) {
        (true, None) => return Err(FamilyError::MissingIndex("m")),
        (true, Some(m)) => m,
        (false, _) => 0,
    };
    let q = match (uses_q, indices.q) {
        (true, None) => return Err(FamilyError::MissingIndex("q")),
        (true, Some(q)) => q,
        (false, _) => 0,
    };
    if !side_condition_met(family, m, q) {
        return Err(FamilyError::SideCondition(condition));
    }
    Ok(instances_at(family, m, q).iter().all(FamilyInstance::holds))
}

/// All instances of every family with enumerated indices `≤ max_index`.
pub fn all_family_instances(max_index: usize) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for family in 1..=17u8 {
        let (uses_m, uses_q, _) = family_shape(family).expect("static family list");
        let m_range = if uses_m { 0..=max_index } else { 0..=0 };
        for m in m_range {
            let q_range = if uses_q { 0..=max_index } else { 0..=0 };
            for q in q_range {
                if side_condition_met(family, m, q) {
                    out.extend(instances_at(family, m, q));
                }
            }
        }
    }
    out
}

/// Outcome of verifying every instance in a sweep.
pub struct SweepReport {
    pub results: Vec<(FamilyInstance, bool)>,
}

impl SweepReport {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|(_, ok)| *ok).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    /// One machine-readable line per instance.
    pub fn lines(&self) -> Vec<String> {
        self.results
            .iter()
            .map(|(instance, ok)| {
                format!(
                    "family={} indices={} {}",
                    instance.family,
                    instance.assignment,
                    if *ok { "pass" } else { "fail" }
                )
            })
            .collect()
    }
}

/// Verifies every family instance with indices `≤ max_index`.
pub fn sweep_families(max_index: usize) -> SweepReport {
    let results = all_family_instances(max_index)
        .into_iter()
        .map(|instance| {
            let ok = instance.holds();
            (instance, ok)
        })
        .collect();
    SweepReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_single_instances_hold() {
        // Permutation letters square to the identity.
        assert_eq!(verify_family(16, Indices { m: Some(3), q: None }), Ok(true));
        // The split-and-reglue exchange relation at its lowest index.
        assert_eq!(verify_family(9, Indices { m: Some(0), q: None }), Ok(true));
    }

    #[test]
    fn side_conditions_are_enforced() {
        assert_eq!(
            verify_family(1, Indices { m: Some(2), q: Some(2) }),
            Err(FamilyError::SideCondition("m<q"))
        );
        assert_eq!(
            verify_family(4, Indices { m: Some(2), q: Some(1) }),
            Err(FamilyError::SideCondition("m>q+1"))
        );
        assert_eq!(
            verify_family(16, Indices { m: None, q: None }),
            Err(FamilyError::MissingIndex("m"))
        );
        assert_eq!(
            verify_family(18, Indices::default()),
            Err(FamilyError::UnknownFamily(18))
        );
    }

    #[test]
    fn sweep_instance_count_is_stable() {
        let instances = all_family_instances(4);
        // 40+20+10+12+20+5+5+20+5+6+5+12+5+6+5+5+5 per family in order.
        assert_eq!(instances.len(), 186);
        // Per family at max 2: 12,6,6,2,6,3,3,6,3,1,3,2,3,1,3,3,3.
        let at_two = all_family_instances(2);
        assert_eq!(at_two.len(), 66);
    }

    #[test]
    fn report_lines_name_family_and_assignment() {
        let report = sweep_families(1);
        let lines = report.lines();
        assert!(lines.iter().all(|l| l.starts_with("family=")));
        assert!(lines.iter().any(|l| l.contains("indices=X:B")));
        assert!(report.all_pass());
    }

    #[test]
    fn swap_past_split_consequence_at_adjacent_indices_holds() {
        // With q one below the split index the relation follows from the
        // equal-index family because permutation letters are involutions.
        for x in Symbol::BOTH {
            for q in 0..3 {
                let lhs = SigmaWord::new(vec![SigmaLetter::pi(q), x.letter(q + 1)]);
                let rhs = SigmaWord::new(vec![
                    x.letter(q),
                    SigmaLetter::pi(q + 1),
                    SigmaLetter::pi(q),
                ]);
                assert!(
                    eval_sigma(&lhs).equals(&eval_sigma(&rhs)),
                    "consequence fails at X={x}, q={q}"
                );
            }
        }
    }

    #[test]
    fn mutated_relations_fail() {
        let mutations: [(&str, &str); 6] = [
            // Same-index split letters do not commute plainly.
            ("A1 A0", "A0 A1"),
            // Equal-index swap-past-split needs the double-swap tail.
            ("p0 A0", "A0 p1"),
            // Wrong index in the exchange relation.
            ("C0 A0", "B0 C1 p1"),
            // Distinct permutation letters are not inverse to each other.
            ("p0 p1", "-"),
            // Right side of the mixed-product relation in the wrong order.
            ("q0 A0", "q1 p0"),
            // Adjacent-index commuting violates the braid pattern.
            ("p0 p1", "p1 p0"),
        ];
        for (lhs, rhs) in mutations {
            let lhs: SigmaWord = lhs.parse().unwrap();
            let rhs: SigmaWord = rhs.parse().unwrap();
            assert!(
                !eval_sigma(&lhs).equals(&eval_sigma(&rhs)),
                "mutation {lhs} = {rhs} unexpectedly holds"
            );
        }
    }
}
