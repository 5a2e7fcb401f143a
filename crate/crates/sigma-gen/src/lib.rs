//! Named generating set for the planar prefix-replacement group.
//!
//! Elements of the group act on pairs of infinite bit sequences by prefix
//! replacement.  This crate fixes a countable family of named generators
//! — strip shuffles `A_i`, `B_i`, `C_i` and strip permutations `p_i`
//! (adjacent transpositions) and `q_i` (swap-first) — and provides:
//!
//! * evaluation of words in those letters to concrete elements,
//! * decomposition of an arbitrary element back into such a word,
//! * verification of the seventeen defining relation families,
//! * the finite-generation identities expressing all letters over a
//!   bounded alphabet,
//! * an exponent-matrix check that the abelianized group is trivial, and
//! * a commutator-product expression for the bit-shuffling square map.

mod abelianization;
mod commutator;
mod decompose;
mod eval;
mod families;
mod finite_gen;
mod letter;

pub use abelianization::{
    abelianization_check, class_of, echelonize, in_lattice, proof_relations, surviving_classes,
    LabelledRelation, CLASS_NAMES, CROSS_TYPE_LABEL,
};
pub use commutator::{
    baker_comm_check, baker_comm_variant_check, baker_commutator_expression, eval_commutator,
    k_commutator, CommutatorWord, OCCURRENCE_COUNT,
};
pub use decompose::{decompose, pattern_word};
pub use eval::{defining_pair, eval_sigma, letter_element, pair_element};
pub use families::{
    all_family_instances, sweep_families, verify_family, FamilyError, FamilyInstance, Indices,
    SweepReport, Symbol,
};
pub use finite_gen::{
    conjugation_identity, elimination_identity, finite_generation_identities, IdentityCheck,
};
pub use letter::{SigmaBase, SigmaLetter, SigmaWord};
