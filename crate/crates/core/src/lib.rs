//! Finite p-groups, their modular group algebras over small finite fields,
//! and the invariants used to tell such algebras apart.
//!
//! The crate is organised bottom-up:
//!
//! * [`gfq`]: arithmetic in `F_{p^k}` and reduced row-echelon subspaces.
//! * [`words`]: group words, presentations and Todd–Coxeter enumeration.
//! * [`group`]: Cayley-table groups with subgroup, series and class machinery.
//! * [`families`]: constructors for the concrete group families.
//! * [`modalg`]: group algebras, augmentation ideals and quotient algebras.
//! * [`invariants`]: fingerprints of `(G, F)` and their comparison.
//! * [`iso`]: brute-force isomorphism search with checkable witnesses.

pub mod caps;
pub mod error;
pub mod families;
pub mod gfq;
pub mod group;
pub mod invariants;
pub mod iso;
pub mod modalg;
pub mod words;

pub use caps::Caps;
pub use error::{Error, Result};
