//! Dynamics of one-dimensional prefix-replacement maps via tree pairs.
//!
//! A map is presented by a pair of finite binary trees and a bijection of
//! their leaves ([`TreePair`]).  This crate grows such pairs by
//! augmentation until their periodic behaviour can be read off directly
//! ([`reveal`]), reports every periodic orbit with its exact period
//! ([`dynamics_report`]), brute-force checks those reports on a census of
//! eventually periodic points ([`census_points`]), factors pairs into
//! leaf-permutation pairs ([`permutation_factor`]), and extracts deep
//! interval transpositions by nested commutators
//! ([`extract_proper_transposition`]).

mod augment;
mod census;
mod factor;
mod pair;
mod report;
mod reveal;
pub mod tree;

pub use augment::{augment, iterated_augment, AugmentError};
pub use census::{census_points, orbit_size};
pub use factor::{
    compose_factors, extract_proper_transposition, permutation_factor, transposition,
    FactorError, TranspositionCertificate,
};
pub use pair::{PairError, TreePair};
pub use report::{dynamics_report, DynamicsReport, OrbitKind, PeriodicRecord};
pub use reveal::{
    difference_roots, imbalance, neutral_cycles, reveal, Component, DLeafClass, RLeafClass,
    RevealOrder, RevealedPair,
};
