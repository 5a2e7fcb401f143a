//! The baker's map as a two-sided binary shift.
//!
//! Points of the square correspond to based bi-infinite binary sequences:
//! the first coordinate reads the bits at indices `0, 1, 2, ...` and the
//! second coordinate the bits at `-1, -2, ...`.  Under this correspondence
//! the baker's map (halve the first coordinate, double the second) acts as
//! the index shift.  This crate provides the sequence model
//! ([`TwoSidedPoint`]), the shift, the correspondence with square points,
//! and the enumeration of finite shift orbits (aperiodic binary necklaces),
//! whose sizes are unbounded.

mod orbits;
mod point;

pub use orbits::{aperiodic_necklace_count, bakers_map, enumerate_periodic_orbits};
pub use point::{random_two_sided, BakerError, TwoSidedPoint};
