//! Decision procedures for finitely presented algebras given by relators of
//! degree at most two over the rationals.
//!
//! The library answers, by exact computation, whether such a presentation is
//! a skew PBW extension of the ground field, which subclasses it falls into,
//! whether the standard monomials form a basis (diamond lemma), whether the
//! algebra is Koszul, and whether an inhomogeneous presentation is a PBW
//! deformation of its quadratic part.
//!
//! All arithmetic is exact over arbitrary-precision rationals; every verdict
//! is either a finite certificate or an explicit refutation witness.

pub mod classify;
pub mod deform;
pub mod error;
pub mod freealg;
pub mod koszul;
pub mod linalg;
pub mod presentation;
pub mod rewrite;
pub mod scalar;

pub use error::Error;
pub use freealg::{GeneratorSet, NcPoly, Word};
pub use presentation::{ParamBinding, Presentation};
pub use scalar::Scalar;
