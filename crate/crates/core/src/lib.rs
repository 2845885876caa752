pub mod complex;
pub mod dimensions;
pub mod error;
pub mod field;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod module;
pub mod random;
pub mod resolution;
pub mod ring;
pub mod value;
pub mod verify;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use module::{FreeModule, GradedMap, PresentedModule};
pub use ring::{Algebra, GradedAlgebra, Monomial, RingElement};
pub use complex::{ChainComplex, ComplexMorphism};
pub use value::{Caps, Certainty, ExtInt};
