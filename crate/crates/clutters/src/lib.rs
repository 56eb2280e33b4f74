//! Combinatorics of d-uniform clutters and exact homological invariants of
//! their circuit ideals.
//!
//! The crate has two halves that check each other:
//!
//! * combinatorial recognizers — simplicial-elimination chordality with
//!   verifiable certificates ([`elimination`]), plus the W-, E-, free-vertex
//!   and resolution-l variants ([`variants`]);
//! * an exact resolution engine — reduced simplicial homology over GF(p) and
//!   the rationals ([`complex`]), graded Betti tables of square-free monomial
//!   ideals via the Hochster summation with an independent Taylor-complex
//!   oracle ([`betti`]), and derived statistics (regularity, index,
//!   projective dimension).
//!
//! The [`stability`] harness replays the reduction process that motivates the
//! whole construction: deleting circuits through a simplicial element must
//! leave every non-linear strand of the Betti table unchanged.

pub mod atlas;
pub mod betti;
pub mod clutter;
pub mod complex;
pub mod elimination;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod linalg;
pub mod monomial;
pub mod set;
pub mod stability;
pub mod variants;

pub use clutter::{Clutter, MinorOp, MinorPath};
pub use complex::{clique_complex, reduced_homology_dims, SimplicialComplex};
pub use elimination::{
    chordality_check, complete_clutter_order, is_simplicial, simplicial_set, verify_certificate,
    ChordalityVerdict, EliminationCertificate, Strategy,
};
pub use error::{Error, Result};
pub use linalg::FieldSpec;
pub use set::VertexSet;
