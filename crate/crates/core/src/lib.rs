//! Cellular resolutions of monomial ideals and their residue currents.
//!
//! The crate builds hull, Scarf and Taylor complexes with exact rational
//! geometry, turns them into free resolutions, checks exactness and
//! minimality, and evaluates the associated residue currents and the
//! fundamental-cycle identity symbolically.

pub mod cellcomplex;
pub mod cycle;
pub mod error;
pub mod hull;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod polytope;
pub mod residue;
pub mod resolution;
pub mod samples;

pub use cellcomplex::{Face, FaceSpec, LabeledCellComplex, Vertex, VertexId};
pub use error::{Error, Result};
pub use monomial::{ExponentVector, IrreducibleComponent, MonomialIdeal};
pub use residue::{CHProduct, ResidueCurrent};
pub use resolution::FreeComplex;
