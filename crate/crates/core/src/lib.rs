//! Color Lie, Hom-Lie color and Hom-color algebras over an abelian grading
//! group: structure-constant representations, identity verification,
//! twisting constructions and a small example corpus.
//!
//! The core is generic over a [`Scalar`] field; exact rational arithmetic
//! is provided through the aliases below.

pub mod algebra;
pub mod axioms;
pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod grading;
pub mod io;
pub mod report;
pub mod scalar;

pub use algebra::{Element, EvenMap, Flavor, GradedAlgebra, GradedBasis, StructureConstants};
pub use error::{Error, Result};
pub use grading::{BiCharacter, GroupElement, GroupSpec, SigmaForm};
pub use report::{Violation, ViolationReport};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type RationalAlgebra = GradedAlgebra<Rational>;
pub type RationalElement = Element<Rational>;
pub type RationalMap = EvenMap<Rational>;
pub type RationalBiCharacter = BiCharacter<Rational>;
pub type RationalSigma = SigmaForm<Rational>;
