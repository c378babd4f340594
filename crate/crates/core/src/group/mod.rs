//! Finite groups given by dense Cayley tables.
//!
//! Element `0` is always the identity. Every group carries a list of
//! distinguished generators; groups built by coset enumeration also keep
//! their presentation and a normal-form word for every element.

mod abelian;
mod conjugacy;
mod elementary;
mod finite_group;
mod metacyclic;
mod quotient;
mod series;
mod subgroup;

pub use abelian::AbelianType;
pub use conjugacy::ConjClass;
pub use finite_group::FiniteGroup;
pub use quotient::Quotient;
pub use series::{CharSeries, PowerMode};
pub use subgroup::Subgroup;

/// Exact base-`p` logarithm of a power of `p`.
pub fn log_p(n: usize, p: u32) -> u32 {
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        debug_assert_eq!(m % p as usize, 0);
        m /= p as usize;
        k += 1;
    }
    k
}

/// The prime `p` with `n = p^k`, `k ≥ 1`.
pub fn prime_of_power(n: usize) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p as u32)
}
