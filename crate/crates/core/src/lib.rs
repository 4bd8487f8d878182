//! The combinatorial category `U` attached to a Koszul Artin-Schelter regular
//! quadratic algebra `A = TV/(R)`, its fiber functor `M` evaluated as exact
//! rational matrices, and the comodule-theoretic invariants of the universal
//! coacting Hopf algebra `aut(A)` that can be read off from them.
//!
//! Modules:
//! - [`words`]: the object monoid Λ, its order and dualities
//! - [`ucat`]: generators, normal forms, Hom counting and enumeration
//! - [`linalg`]: exact rational linear algebra and distributivity
//! - [`algebra`]: quadratic algebras, Koszul and AS checks
//! - [`fiber`]: the functor `M`, standard/costandard/simple dimensions
//! - [`presentation`]: Manin matrices and the presentation of `aut` of a polynomial ring

pub mod algebra;
mod error;
pub mod fiber;
pub mod linalg;
pub mod presentation;
pub mod ucat;
pub mod words;

pub use error::Error;
