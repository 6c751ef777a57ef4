//! Exact arithmetic for quantum theory over the monoid fields
//! `F_{1^l} = {0} ∪ μ_l`, with a finite-field modal comparison.
//!
//! - [`f1_algebra`]: elements, power maps, automorphisms, involutions.
//! - [`frames`]: state vectors, the partial standard form, rays, tensors.
//! - [`operators`]: monomial and subunital matrices, unitaries, observables.
//! - [`clone_delete`]: cloning obstructions and the almost-unitary deleter.
//! - [`mqt`]: `F_{q^2}` arithmetic and the side-by-side dictionary.
//! - [`selftest`]: the bundled exhaustive checks.

pub mod clone_delete;
pub mod error;
pub mod f1_algebra;
pub mod frames;
pub mod mqt;
pub mod operators;
pub mod selftest;

pub use error::{Budget, Error, Result};
pub use f1_algebra::{Conjugation, F1Element, FrobeniusMap, InvolutionSpec};
pub use frames::{FormValue, PerpSpace, ProjectiveRay, StateVector};
pub use operators::{LinearOperator, MonomialMatrix, SubunitalMatrix};
