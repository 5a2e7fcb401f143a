use nv_elements::{compose, Element};

use crate::eval::{eval_sigma, letter_element};
use crate::letter::{SigmaLetter, SigmaWord};

/// A group expression over generator letters, closed under product,
/// inverse, and the commutator `[x, y] = x y x⁻¹ y⁻¹`.
#[derive(Clone, Debug)]
pub enum CommutatorWord {
    Letter(SigmaLetter),
    Product(Vec<CommutatorWord>),
    Inverse(Box<CommutatorWord>),
    Commutator(Box<CommutatorWord>, Box<CommutatorWord>),
}

impl CommutatorWord {
    pub fn letter(l: SigmaLetter) -> CommutatorWord {
        CommutatorWord::Letter(l)
    }

    pub fn product(factors: Vec<CommutatorWord>) -> CommutatorWord {
        CommutatorWord::Product(factors)
    }

    pub fn inverse(self) -> CommutatorWord {
        CommutatorWord::Inverse(Box::new(self))
    }

    pub fn commutator(x: CommutatorWord, y: CommutatorWord) -> CommutatorWord {
        CommutatorWord::Commutator(Box::new(x), Box::new(y))
    }

    /// Conjugation `g · self · g⁻¹`.
    pub fn conjugated_by(self, g: CommutatorWord) -> CommutatorWord {
        CommutatorWord::Product(vec![g.clone(), self, g.inverse()])
    }
}

/// Evaluates an expression tree to an element; products compose from right
/// to left like generator words.
pub fn eval_commutator(expr: &CommutatorWord) -> Element {
    match expr {
        CommutatorWord::Letter(l) => letter_element(l),
        CommutatorWord::Product(factors) => factors
            .iter()
            .fold(Element::identity(2), |acc, f| {
                compose(&acc, &eval_commutator(f)).reduce()
            }),
        CommutatorWord::Inverse(inner) => eval_commutator(inner).invert(),
        CommutatorWord::Commutator(x, y) => {
            let x = eval_commutator(x);
            let y = eval_commutator(y);
            compose(
                &compose(&compose(&x, &y).reduce(), &x.invert()).reduce(),
                &y.invert(),
            )
            .reduce()
        }
    }
}

/// The eight commutators appearing in the product expression for the
/// bit-shuffling square map `C0`.
pub fn k_commutator(n: usize) -> CommutatorWord {
    use CommutatorWord as W;
    let l = |text: &str| W::letter(text.parse().expect("static letter"));
    match n {
        1 => W::commutator(l("A0'"), l("A1")),
        2 => W::product(vec![l("A1"), W::commutator(l("p1'"), l("A0'")), l("A1'")]),
        3 => W::commutator(l("p1'"), l("q1'")),
        4 => W::commutator(l("q1'"), l("A0'")),
        5 => W::commutator(l("A1'"), l("p0'")),
        6 => W::commutator(l("A0'"), l("C1'")),
        7 => W::commutator(l("B1'"), l("p0'")),
        8 => W::commutator(l("p1'"), l("A0'")),
        _ => panic!("commutator factors are numbered 1 through 8"),
    }
}

/// The four factor groups of the expression, as (K number, inverted) pairs
/// in product order; the first group is conjugated by `q1`.
const GROUPS: [&[(usize, bool)]; 4] = [
    &[
        (6, false),
        (1, false),
        (2, false),
        (3, false),
        (4, false),
        (1, false),
        (2, false),
        (8, false),
        (4, true),
    ],
    &[
        (2, true),
        (1, true),
        (6, false),
        (6, false),
        (1, false),
        (2, false),
    ],
    &[
        (3, false),
        (4, false),
        (1, false),
        (2, false),
        (8, false),
        (7, false),
    ],
    // Inverted as a block below.
    &[
        (1, false),
        (2, false),
        (3, false),
        (4, false),
        (5, false),
        (1, false),
        (2, false),
    ],
];

/// Number of commutator-factor occurrences across the four groups.
pub const OCCURRENCE_COUNT: usize = 28;

/// Builds the claimed product-of-commutators expression for `C0`.
///
/// `skip_occurrence` drops the n-th commutator factor (0-based across all
/// four groups); `conjugated = false` omits the `q1 … q1'` conjugation
/// around the first group.  Both options exist to show the expression is
/// sensitive to every factor.
pub fn baker_commutator_expression(
    skip_occurrence: Option<usize>,
    conjugated: bool,
) -> CommutatorWord {
    let mut position = 0;
    let mut groups: Vec<Vec<CommutatorWord>> = Vec::new();
    for group in GROUPS {
        let mut factors = Vec::new();
        for &(n, inverted) in group {
            if skip_occurrence != Some(position) {
                let factor = k_commutator(n);
                factors.push(if inverted { factor.inverse() } else { factor });
            }
            position += 1;
        }
        groups.push(factors);
    }
    assert_eq!(position, OCCURRENCE_COUNT);
    let [g1, g2, g3, g4] = groups.try_into().expect("four groups");
    let mut g1 = CommutatorWord::Product(g1);
    if conjugated {
        g1 = g1.conjugated_by(CommutatorWord::letter(SigmaLetter::pibar(1)));
    }
    CommutatorWord::Product(vec![
        g1,
        CommutatorWord::Product(g2),
        CommutatorWord::Product(g3),
        CommutatorWord::Product(g4).inverse(),
    ])
}

/// True iff the full expression evaluates to `C0` exactly.
pub fn baker_comm_check() -> bool {
    baker_comm_variant_check(None, true)
}

/// Evaluates a variant of the expression against `C0`.
pub fn baker_comm_variant_check(skip_occurrence: Option<usize>, conjugated: bool) -> bool {
    let expr = baker_commutator_expression(skip_occurrence, conjugated);
    let c0 = eval_sigma(&SigmaWord::new(vec![SigmaLetter::c(0)]));
    eval_commutator(&expr).equals(&c0)
}
