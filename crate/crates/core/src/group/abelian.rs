use serde::{Deserialize, Serialize};
use std::fmt;

use super::{log_p, FiniteGroup, Subgroup};
use crate::{Error, Result};

/// Isomorphism type of a finite abelian p-group: the orders of its cyclic
/// factors in non-increasing order. The trivial group has the empty type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianType {
    orders: Vec<usize>,
}

impl AbelianType {
    /// Validates and sorts a list of prime-power cyclic orders.
    pub fn new(mut orders: Vec<usize>) -> Result<Self> {
        orders.retain(|&o| o != 1);
        let mut prime = None;
        for &o in &orders {
            let p = super::prime_of_power(o).ok_or(Error::NotPGroup(o))?;
            if *prime.get_or_insert(p) != p {
                return Err(Error::NotPGroup(orders.iter().product()));
            }
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(AbelianType { orders })
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    /// Recovers the type from `|Ω_k|` for `k = 0, 1, 2, …` (ending once the
    /// whole group is reached): the number of cyclic factors of order at
    /// least `p^k` is `log_p |Ω_k / Ω_{k-1}|`.
    pub fn from_omega_counts(p: u32, counts: &[usize]) -> Self {
        let mut at_least = Vec::new();
        for w in counts.windows(2) {
            at_least.push(log_p(w[1] / w[0], p) as usize);
        }
        let mut orders = Vec::new();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..at_least[k] - next {
                orders.push((p as usize).pow(k as u32 + 1));
            }
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        AbelianType { orders }
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, o) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, "]")
    }
}

impl FiniteGroup {
    /// Type of an abelian p-group.
    pub fn abelian_type(&self) -> Result<AbelianType> {
        if self.order() == 1 {
            return Ok(AbelianType { orders: Vec::new() });
        }
        let p = self.require_p_group()?;
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let mut counts = vec![1usize];
        let mut pk = 1i64;
        while *counts.last().unwrap() < self.order() {
            pk *= p as i64;
            counts.push((0..self.order()).filter(|&g| self.pow(g, pk) == 0).count());
        }
        Ok(AbelianType::from_omega_counts(p, &counts))
    }

    /// Type of the abelian section `X/Y`.
    pub fn section_type(&self, x: &Subgroup, y: &Subgroup) -> Result<AbelianType> {
        self.section(x, y)?.abelian_type()
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|x| self.element_order(x) == self.order())
    }

    /// Type of an abelian subgroup.
    pub fn subgroup_type(&self, h: &Subgroup) -> Result<AbelianType> {
        self.subgroup_as_group(h).abelian_type()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_counts() {
        // C4 x C2: |Ω_0| = 1, |Ω_1| = 4, |Ω_2| = 8
        let t = AbelianType::from_omega_counts(2, &[1, 4, 8]);
        assert_eq!(t.orders(), &[4, 2]);
        let t = AbelianType::from_omega_counts(3, &[1, 3, 9, 27]);
        assert_eq!(t.orders(), &[27]);
        assert_eq!(t.to_string(), "[27]");
    }

    #[test]
    fn new_validates() {
        assert_eq!(AbelianType::new(vec![2, 4, 1]).unwrap().orders(), &[4, 2]);
        assert!(AbelianType::new(vec![6]).is_err());
        assert!(AbelianType::new(vec![2, 3]).is_err());
    }

    #[test]
    fn cyclic_twelve_rejected() {
        let mut mul = vec![0u32; 144];
        for a in 0..12 {
            for b in 0..12 {
                mul[a * 12 + b] = ((a + b) % 12) as u32;
            }
        }
        let g = FiniteGroup::from_table(12, mul).unwrap();
        assert_eq!(g.abelian_type(), Err(Error::NotPGroup(12)));
    }
}
