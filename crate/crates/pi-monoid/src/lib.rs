//! The positive monoid behind the 2-dimensional prefix-replacement group.
//!
//! Elements are [`PatternSequence`]s: infinite sequences of numbered
//! decompositions of the unit square, almost all trivial.  The monoid is
//! generated by letters that split one numbered rectangle ([`MonoidLetter::V`]
//! and [`MonoidLetter::H`]) or swap two adjacent number tags
//! ([`MonoidLetter::S`]); [`eval_word`] runs a word from the trivial
//! sequence and [`multiply`] pastes one sequence into another.
//!
//! [`rewrite_to_pq`] normalizes any word into split-then-swap shape, and
//! [`pattern_to_pq`] encodes a numbered decomposition of the unit square as
//! such a word dividing only square 0 — the bridge from group elements to
//! monoid words used by the generating-set layer.

mod letter;
mod pq;
mod relations;
mod rewrite;
mod sequence;

pub use letter::{MonoidLetter, MonoidWord};
pub use pq::pattern_to_pq;
pub use relations::{check_monoid_relation, relation_instances, RelationInstance};
pub use rewrite::{is_pq_shape, pq_parts, rewrite_to_pq};
pub use sequence::{eval_word, multiply, pi0_sequence, PatternSequence, SequenceError, DIM};
