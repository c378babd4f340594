//! Slow, direct reference computations for cross-checking `mip-core`.
//!
//! Everything here works from the Cayley table and the field tables only:
//! products are plain convolutions, ideals are spans of explicit products
//! over *all* group elements, and linear algebra is a fresh reduced echelon
//! form. None of the shortcuts used by the library (generator-only
//! closures, truncated power enumeration, Frattini tests) appear here.

pub mod algebra;
pub mod corpus;
pub mod group;
pub mod hh1;
pub mod linalg;

pub use corpus::{build, groups, CORPUS};
pub use linalg::Span;
