//! Elements of the higher-dimensional Thompson groups `nV`, represented as
//! pairs of numbered brick patterns over the Cantor cube.
//!
//! The crate decides the word problem (compose with the inverse, then test
//! the domain-equals-range identity criterion), evaluates elements exactly on
//! eventually periodic points, reduces representatives, and constructs the
//! transitivity maps that push any proper brick selection into any target
//! brick.

mod corpus;
mod element;
mod file;
mod transitivity;

pub use corpus::{random_element, random_pattern, random_point};
pub use element::{compose, Element, ElementError};
pub use file::{read_element, write_element};
pub use transitivity::{isolating_bricks, transitivity_map, TransitivityError};
