//! Combinatorial dynamics on finite posets and their relatives.
//!
//! The crate has three layers:
//!
//! * state spaces: finite posets and their order ideals ([`poset`]),
//!   increasing tableaux ([`tableau`]), plane partitions in a box ([`pp`]),
//!   and fully-packed loop configurations ([`fpl`]);
//! * actions on those spaces: element toggles, rowmotion, affine hyperplane
//!   toggles and the generalized promotion family ([`lattice`]), K-promotion
//!   and K-Bender-Knuth involutions ([`tableau`]), and gyration (both the
//!   toggle-group version and the local-move version on loop configurations);
//! * exhaustive verification: orbit partitions, cycle structure, resonance
//!   of a projected statistic, and divisibility reports ([`dynamics`]),
//!   plus a [`registry`] binding named systems for the command-line tool.
//!
//! Everything is deterministic: enumeration orders are fixed, reports are
//! byte-identical across runs and across worker counts.

pub mod bits;
pub mod dynamics;
pub mod error;
pub mod fpl;
pub mod lattice;
pub mod poset;
pub mod pp;
pub mod registry;
pub mod suites;
pub mod tableau;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
