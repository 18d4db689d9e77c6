//! Exact-arithmetic inner-ideal calculus for classical Lie algebras.
//!
//! Everything here is computed over the rationals with no rounding: dense
//! matrices of `BigRational` entries, subspaces kept in reduced row echelon
//! form so that equality of spans is structural equality, and on top of that
//! the objects of interest — matrix algebras with involution, their one-sided
//! ideals and idempotents, classical Lie algebras `sl`/`so`/`sp`, inner
//! ideals and their regular decompositions, the δ weight functional, diagonal
//! embeddings, finite-rank operators over countable dual pairs, and directed
//! towers of matrix algebras with coherent idempotent systems.
//!
//! The ground field is ℚ rather than an algebraically closed field. All
//! constructions exercised here (split Cartan subalgebras, hyperbolic bases,
//! isotropic idempotents) exist over ℚ for the split classical forms used,
//! so the checks are exact; see the README for the one caveat this entails
//! for classification converses.

pub mod algebra;
pub mod delta;
pub mod embed;
pub mod error;
pub mod finitary;
pub mod inner;
pub mod json;
pub mod lie;
pub mod limits;
pub mod linalg;
pub mod sampling;

pub use error::{Certificate, Error, Result};
pub use linalg::{Matrix, Scalar, Subspace};
