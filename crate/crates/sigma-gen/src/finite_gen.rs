use crate::eval::eval_sigma;
use crate::letter::{SigmaBase, SigmaLetter, SigmaWord};

/// The two identity schemes showing that the four letter kinds at indices 0
/// and 1 generate everything: conjugation pushes any letter index up, and
/// the elimination scheme writes every `C` letter in terms of the rest.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: SigmaWord,
    pub rhs: SigmaWord,
    pub holds: bool,
}

fn letter(base: SigmaBase, index: usize) -> SigmaLetter {
    SigmaLetter::new(base, index)
}

/// `Z_{q+1}` against `A0^{-q} Z_1 A0^{q}` for one letter kind.
pub fn conjugation_identity(base: SigmaBase, q: usize) -> (SigmaWord, SigmaWord) {
    let lhs = SigmaWord::new(vec![letter(base, q + 1)]);
    let mut rhs = Vec::new();
    rhs.extend(std::iter::repeat(SigmaLetter::a(0).inverted()).take(q));
    rhs.push(letter(base, 1));
    rhs.extend(std::iter::repeat(SigmaLetter::a(0)).take(q));
    (lhs, SigmaWord::new(rhs))
}

/// `C_m` against `(q_m B_m q_{m+1} p_m)(B_m p_{m+1} A_m^{-1})`.
pub fn elimination_identity(m: usize) -> (SigmaWord, SigmaWord) {
    let lhs = SigmaWord::new(vec![SigmaLetter::c(m)]);
    let rhs = SigmaWord::new(vec![
        SigmaLetter::pibar(m),
        SigmaLetter::b(m),
        SigmaLetter::pibar(m + 1),
        SigmaLetter::pi(m),
        SigmaLetter::b(m),
        SigmaLetter::pi(m + 1),
        SigmaLetter::a(m).inverted(),
    ]);
    (lhs, rhs)
}

/// Verifies both identity schemes for every letter kind and all indices up
/// to `max_index`.
pub fn finite_generation_identities(max_index: usize) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for base in SigmaBase::ALL {
        for q in 0..=max_index {
            let (lhs, rhs) = conjugation_identity(base, q);
            let holds = eval_sigma(&lhs).equals(&eval_sigma(&rhs));
            out.push(IdentityCheck {
                label: format!("conjugation Z:{lhs} q:{q}"),
                lhs,
                rhs,
                holds,
            });
        }
    }
    for m in 0..=max_index {
        let (lhs, rhs) = elimination_identity(m);
        let holds = eval_sigma(&lhs).equals(&eval_sigma(&rhs));
        out.push(IdentityCheck {
            label: format!("elimination m:{m}"),
            lhs,
            rhs,
            holds,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pushing_an_index_up_by_one_conjugation_holds() {
        let (lhs, rhs) = conjugation_identity(SigmaBase::C, 1);
        assert_eq!(lhs.to_string(), "C2");
        assert_eq!(rhs.to_string(), "A0' C1 A0");
        assert!(eval_sigma(&lhs).equals(&eval_sigma(&rhs)));
    }

    #[test]
    fn eliminating_the_lowest_c_letter_holds() {
        let (lhs, rhs) = elimination_identity(0);
        assert_eq!(lhs.to_string(), "C0");
        assert_eq!(rhs.to_string(), "q0 B0 q1 p0 B0 p1 A0'");
        assert!(eval_sigma(&lhs).equals(&eval_sigma(&rhs)));
    }

    #[test]
    fn wrong_sign_conjugation_fails() {
        // A0 C1 A0' instead of A0' C1 A0.
        let lhs: SigmaWord = "C2".parse().unwrap();
        let rhs: SigmaWord = "A0 C1 A0'".parse().unwrap();
        assert!(!eval_sigma(&lhs).equals(&eval_sigma(&rhs)));
    }

    #[test]
    fn all_small_identities_hold() {
        let checks = finite_generation_identities(2);
        assert_eq!(checks.len(), 5 * 3 + 3);
        for check in checks {
            assert!(check.holds, "{} failed: {} vs {}", check.label, check.lhs, check.rhs);
        }
    }
}
