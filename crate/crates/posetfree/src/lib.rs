//! Pattern-free families in the Boolean lattice.
//!
//! Families of subsets of `[n]` are sorted `u64` masks ([`lattice`]); patterns
//! are finite posets given by their Hasse diagrams ([`poset`]). On top of these
//! sit blow-ups, embedding search, supersaturation procedures, the container
//! iteration, exact extremal solvers and random-family experiments.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod lattice;
pub mod blowup;
pub mod containers;
pub mod embed;
pub mod extremal;
pub mod poset;
pub mod random;
pub mod supersat;

pub use error::{Error, Result};
pub use lattice::{Set, SetFamily};
pub use poset::{catalog, CatalogEntry, CatalogName, Poset};
