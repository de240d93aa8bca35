//! Exact counting of perfect matchings (domino tilings) on layered graph
//! grids, together with the sequence registry, closed forms, and identity
//! checks that audit the published formula catalog for those counts.
//!
//! The crate is `no_std` + `alloc`: all arithmetic is exact (`BigInt` /
//! `BigRational`), and nothing here performs IO. File formats, OEIS
//! fixtures, and the command-line front end live in the companion
//! `gridmatch-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod families;
pub mod graph;
pub mod identities;
pub mod matching;
pub mod sequences;

pub use algebra::{QuadraticElement, Rational};
pub use graph::{Graph, VertexLabel};
pub use num_bigint::BigInt;
