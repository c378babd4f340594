//! Small finite fields `F_{p^k}` and dense reduced row-echelon subspaces over
//! them.

mod field;
pub mod matrix;
mod subspace;

pub use field::{is_prime, FiniteField, Scalar};
pub use subspace::{CombineMode, Subspace};
