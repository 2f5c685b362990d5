//! Exact computation of the zero sets of Bernstein–Sato polynomials for reduced,
//! locally quasi-homogeneous polynomials in three variables, with a complete
//! treatment of central essential indecomposable line arrangements.
//!
//! Everything is computed over Q with exact arithmetic: Gröbner bases give
//! the graded pieces of the Milnor algebra and of its zeroth local cohomology,
//! and the root sets are assembled from those degree data.

pub mod arrangement;
pub mod bsroots;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod linalg;
pub mod milnor;
pub mod polyring;

pub use error::{Error, Result};
