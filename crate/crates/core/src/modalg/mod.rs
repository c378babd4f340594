//! Modular group algebras `FG`, their augmentation-ideal filtrations and
//! finite-dimensional quotient algebras given by structure constants.

mod algebra;
mod ideals;
mod quotient;

pub use algebra::{GroupAlgebra, Ideal};
pub use quotient::{KernelSize, QuotientAlgebra};
