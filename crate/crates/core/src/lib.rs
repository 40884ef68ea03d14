//! Exact verification of Erdős–Ko–Rado properties for pure simplicial complexes.
//!
//! Faces are bit vectors over a [`Block`] word; [`Face128`] and [`Complex128`] cover complexes
//! on up to 128 vertices and are what the command-line tool uses by default.

pub mod bitset;
pub mod block;
pub mod catalog;
pub mod clique;
pub mod complex;
mod contraction;
pub mod dual_pairs;
pub mod ekr;
pub mod error;
pub mod face;
pub mod family;
pub mod generators;
pub mod json;
mod predicates;

pub use block::Block;
pub use complex::SimplicialComplex;
pub use dual_pairs::{DualPair, UpperSet};
pub use ekr::EkrReport;
pub use error::{EkrError, Result};
pub use face::Face;
pub use family::FacetFamily;
pub use predicates::MeepViolation;

pub type Face32 = Face<u32>;
pub type Face64 = Face<u64>;
pub type Face128 = Face<u128>;
pub type Complex32 = SimplicialComplex<u32>;
pub type Complex64 = SimplicialComplex<u64>;
pub type Complex128 = SimplicialComplex<u128>;
