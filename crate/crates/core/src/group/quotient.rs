use super::{FiniteGroup, Subgroup};
use crate::{Error, Result};

/// A quotient group `G/N` together with the projection `G → G/N`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the index of the coset `gN`.
    pub projection: Vec<usize>,
}

impl FiniteGroup {
    /// `G/N` for a normal subgroup `N`. Cosets are numbered by their least
    /// element, so the identity coset is `0`.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if n.parent_order() != self.order() {
            return Err(Error::NotSubgroup);
        }
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        Ok(self.quotient_unchecked(n))
    }

    pub(crate) fn quotient_unchecked(&self, n: &Subgroup) -> Quotient {
        let order = self.order();
        let mut projection = vec![usize::MAX; order];
        let mut reps = Vec::with_capacity(order / n.order());
        for x in 0..order {
            if projection[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for &m in n.elements() {
                projection[self.mul(x, m)] = idx;
            }
        }
        let q = reps.len();
        let mut mul = vec![0u32; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * q + j] = projection[self.mul(a, b)] as u32;
            }
        }
        let gens = self.generators().iter().map(|&g| projection[g]).collect();
        let mut group = FiniteGroup::from_parts(q, mul, gens, self.prime());
        group.set_prime(self.prime());
        Quotient { group, projection }
    }

    /// The subgroup `H` as a group in its own right, with elements numbered
    /// by their position in `H.elements()` (the identity stays `0`).
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let elems = h.elements();
        let m = elems.len();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let mut mul = vec![0u32; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                mul[i * m + j] = pos[self.mul(a, b)] as u32;
            }
        }
        let gens = h.generators().iter().map(|&g| pos[g]).collect();
        let mut g = FiniteGroup::from_parts(m, mul, gens, self.prime());
        g.set_prime(self.prime());
        g
    }

    /// The section `X/Y` for subgroups `Y ⊴ X`.
    pub fn section(&self, x: &Subgroup, y: &Subgroup) -> Result<FiniteGroup> {
        if !y.is_subgroup_of(x) {
            return Err(Error::NotSubgroup);
        }
        let xg = self.subgroup_as_group(x);
        let yg = xg.subgroup_generated(
            &y.generators()
                .iter()
                .map(|&e| x.elements().binary_search(&e).unwrap())
                .collect::<Vec<_>>(),
        );
        Ok(xg.quotient(&yg)?.group)
    }

    /// Image of a subgroup under a projection map onto `target`.
    pub fn image_in(&self, h: &Subgroup, projection: &[usize], target: &FiniteGroup) -> Subgroup {
        let imgs: Vec<usize> = h.generators().iter().map(|&g| projection[g]).collect();
        target.subgroup_generated(&imgs)
    }

    /// Full preimage of a subgroup of a quotient.
    pub fn preimage(&self, h: &Subgroup, projection: &[usize]) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&g| h.contains(projection[g]))
            .collect();
        let gens = self.greedy_generators(&elems);
        Subgroup::from_parts(self.order(), elems, gens)
    }
}
