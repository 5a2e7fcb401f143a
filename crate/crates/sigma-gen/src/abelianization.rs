use crate::eval::eval_sigma;
use crate::letter::{SigmaBase, SigmaWord};

/// The eight generator classes surviving index folding: kinds `A`, `B`,
/// `p`, `q` at indices 0 and 1.  Conjugation identities make every letter
/// of index `≥ 2` fall into the index-1 class, and every `C` letter is a
/// word in the other kinds, so these eight classes span the quotient by
/// commutators.
pub const CLASS_NAMES: [&str; 8] = ["A0", "A1", "B0", "B1", "p0", "p1", "q0", "q1"];

pub fn class_of(base: SigmaBase, index: usize) -> usize {
    let kind = match base {
        SigmaBase::A => 0,
        SigmaBase::B => 1,
        SigmaBase::Pi => 2,
        SigmaBase::PiBar => 3,
        SigmaBase::C => panic!("C letters are eliminated before abelianizing"),
    };
    kind * 2 + index.min(1)
}

/// A named relation instance feeding the exponent-sum system.
#[derive(Clone, Debug)]
pub struct LabelledRelation {
    pub label: &'static str,
    pub lhs: SigmaWord,
    pub rhs: SigmaWord,
}

impl LabelledRelation {
    fn new(label: &'static str, lhs: &str, rhs: &str) -> LabelledRelation {
        LabelledRelation {
            label,
            lhs: lhs.parse().expect("static word"),
            rhs: rhs.parse().expect("static word"),
        }
    }

    /// Exponent sums of `lhs · rhs⁻¹` per generator class.
    pub fn exponent_row(&self) -> [i64; 8] {
        let mut row = [0i64; 8];
        for letter in self.lhs.letters() {
            row[class_of(letter.base, letter.index)] += if letter.inverse { -1 } else { 1 };
        }
        for letter in self.rhs.letters() {
            row[class_of(letter.base, letter.index)] -= if letter.inverse { -1 } else { 1 };
        }
        row
    }

    /// The relation must actually hold as an element equality.
    pub fn holds(&self) -> bool {
        eval_sigma(&self.lhs).equals(&eval_sigma(&self.rhs))
    }
}

/// The specific relation instances used to kill all eight classes.  All are
/// instances of the verified relation families.
pub fn proof_relations() -> Vec<LabelledRelation> {
    vec![
        LabelledRelation::new("swap-past-A at 0", "p0 A0", "A1 p0 p1"),
        LabelledRelation::new("swap-past-B at 0", "p0 B0", "B1 p0 p1"),
        LabelledRelation::new("swap-past-A at 1", "p1 A1", "A2 p1 p2"),
        LabelledRelation::new("braid p0 p1", "p0 p1 p0", "p1 p0 p1"),
        LabelledRelation::new("deep-swap-past-A at 1", "q1 A1", "p1 q2"),
        LabelledRelation::new("deep-swap-past-A at 0", "q0 A0", "p0 q1"),
        LabelledRelation::new("mixed braid p0 q1", "p0 q1 p0", "q1 p0 q1"),
        LabelledRelation::new("cross-type A against B", "A0 B1 B0", "B0 A1 A0 p1"),
    ]
}

/// The label of the one relation tying the `B` classes to the others.
pub const CROSS_TYPE_LABEL: &str = "cross-type A against B";

/// Brings an integer matrix into row echelon form (rows generate the same
/// lattice) and returns the echelon rows.
pub fn echelonize(mut rows: Vec<[i64; 8]>) -> Vec<[i64; 8]> {
    rows.retain(|r| r.iter().any(|&x| x != 0));
    let mut done = 0;
    for col in 0..8 {
        loop {
            let mut best: Option<(usize, i64)> = None;
            for (r, row) in rows.iter().enumerate().skip(done) {
                let v = row[col].abs();
                if v != 0 && best.map_or(true, |(_, b)| v < b) {
                    best = Some((r, v));
                }
            }
            let Some((pivot, _)) = best else { break };
            rows.swap(done, pivot);
            let mut reduced = true;
            for r in done + 1..rows.len() {
                if rows[r][col] != 0 {
                    let q = rows[r][col] / rows[done][col];
                    for c in 0..8 {
                        rows[r][c] -= q * rows[done][c];
                    }
                    if rows[r][col] != 0 {
                        reduced = false;
                    }
                }
            }
            if reduced {
                if rows[done][col] < 0 {
                    for c in 0..8 {
                        rows[done][c] = -rows[done][c];
                    }
                }
                done += 1;
                break;
            }
        }
    }
    rows.truncate(done);
    rows
}

/// Membership of a vector in the lattice spanned by echelon rows.
pub fn in_lattice(echelon: &[[i64; 8]], mut v: [i64; 8]) -> bool {
    for row in echelon {
        let lead = row
            .iter()
            .position(|&x| x != 0)
            .expect("echelon rows are nonzero");
        if v[lead] != 0 && v[lead] % row[lead] == 0 {
            let q = v[lead] / row[lead];
            for c in 0..8 {
                v[c] -= q * row[c];
            }
        }
    }
    v == [0; 8]
}

/// The generator classes whose vanishing does *not* follow from the given
/// relations by exponent counting.
pub fn surviving_classes(relations: &[LabelledRelation]) -> Vec<&'static str> {
    let rows: Vec<[i64; 8]> = relations.iter().map(LabelledRelation::exponent_row).collect();
    let echelon = echelonize(rows);
    CLASS_NAMES
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let mut unit = [0i64; 8];
            unit[i] = 1;
            !in_lattice(&echelon, unit)
        })
        .map(|(_, name)| *name)
        .collect()
}

/// True iff the recorded relation instances force every generator class to
/// vanish, i.e. the group they present has no abelian quotient.
pub fn abelianization_check() -> bool {
    surviving_classes(&proof_relations()).is_empty()
}
