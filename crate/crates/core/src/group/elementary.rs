use std::collections::{BTreeMap, HashMap, HashSet};

use super::{log_p, FiniteGroup, Subgroup};
use crate::{Error, Result};

impl FiniteGroup {
    /// Elements of order exactly `p`.
    fn order_p_elements(&self, p: u32) -> Vec<usize> {
        (1..self.order())
            .filter(|&x| self.pow(x, p as i64) == 0)
            .collect()
    }

    /// All elementary abelian subgroups, found by breadth-first extension
    /// with commuting elements of order `p`, deduplicated by element set.
    /// Returns the subgroups and, for each, whether it is maximal. Fails once
    /// more than `cap` subgroups have been visited.
    pub fn elementary_abelian_subgroups(&self, cap: usize) -> Result<Vec<(Subgroup, bool)>> {
        let p = match self.prime() {
            Some(p) => p,
            None if self.order() == 1 => return Ok(vec![(self.trivial_subgroup(), true)]),
            None => return Err(Error::NotPGroup(self.order())),
        };
        let candidates = self.order_p_elements(p);
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut all = vec![(self.trivial_subgroup(), true)];
        seen.insert(vec![0]);
        let mut i = 0;
        while i < all.len() {
            let e = all[i].0.clone();
            let mut covered = e.mask().to_vec();
            let mut maximal = true;
            for &x in &candidates {
                if covered[x]
                    || !e
                        .generators()
                        .iter()
                        .all(|&g| self.mul(g, x) == self.mul(x, g))
                {
                    continue;
                }
                maximal = false;
                let ext = self.extend(&e, &[x]);
                for &y in ext.elements() {
                    covered[y] = true;
                }
                if seen.insert(ext.elements().to_vec()) {
                    if all.len() >= cap {
                        return Err(Error::EnumerationCap {
                            cap: cap as u64,
                            what: "elementary abelian subgroups",
                        });
                    }
                    all.push((ext, true));
                }
            }
            all[i].1 = maximal;
            i += 1;
        }
        Ok(all)
    }

    /// Number of conjugacy classes of maximal elementary abelian subgroups,
    /// keyed by rank.
    pub fn maximal_elem_abelian_classes(&self, cap: usize) -> Result<BTreeMap<u32, usize>> {
        let all = self.elementary_abelian_subgroups(cap)?;
        let p = self.prime().unwrap_or(2);
        let maximal: Vec<&Subgroup> = all.iter().filter(|(_, m)| *m).map(|(s, _)| s).collect();
        let index: HashMap<&[usize], usize> = maximal
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements(), i))
            .collect();
        let mut class_of = vec![usize::MAX; maximal.len()];
        let mut counts = BTreeMap::new();
        let gens = self.nontrivial_generators();
        for start in 0..maximal.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            class_of[start] = start;
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for &g in &gens {
                    let conj = self.conjugate_elements(maximal[s], g);
                    let t = index[conj.as_slice()];
                    if class_of[t] == usize::MAX {
                        class_of[t] = start;
                        stack.push(t);
                    }
                }
            }
            let rank = log_p(maximal[start].order(), p);
            *counts.entry(rank).or_insert(0) += 1;
        }
        Ok(counts)
    }

    /// Every subgroup `U` with `base ⊆ U ⊆ ⟨base, pool⟩` obtainable by
    /// adjoining elements of `pool` one at a time.
    fn subgroups_over(&self, base: &Subgroup, pool: &[usize]) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(base.elements().to_vec());
        let mut all = vec![base.clone()];
        let mut i = 0;
        while i < all.len() {
            let s = all[i].clone();
            for &x in pool {
                if s.contains(x) {
                    continue;
                }
                let ext = self.extend(&s, &[x]);
                if seen.insert(ext.elements().to_vec()) {
                    all.push(ext);
                }
            }
            i += 1;
        }
        all
    }

    /// Largest `r` with `G ≅ C_p^r × U`. A direct factor `A ≅ C_p^r` lies in
    /// `Ω_1(Z(G))` and its complement `U` is normal and contains `Frat(G)`, so
    /// both are found among subgroups of `Ω_1(Z(G))` and subgroups over
    /// `Frat(G)`; the pair works iff `|A||U| = |G|` and `A ∩ U = 1`.
    pub fn max_elem_abelian_direct_factor(&self, cap: usize) -> Result<u32> {
        if self.order() > cap {
            return Err(Error::OrderCap {
                order: self.order(),
                cap,
                what: "elementary abelian direct factor",
            });
        }
        let Some(p) = self.prime() else {
            return if self.order() == 1 {
                Ok(0)
            } else {
                Err(Error::NotPGroup(self.order()))
            };
        };
        let z = self.center();
        let omega_z = self.omega_of(&z, 1);
        let frat = self.frattini(&self.whole());
        let a_list = self.subgroups_over(&self.trivial_subgroup(), omega_z.elements());
        let u_list = self.subgroups_over(&frat, &(0..self.order()).collect::<Vec<_>>());
        let mut best = 0;
        for a in &a_list {
            let r = log_p(a.order(), p);
            if r <= best {
                continue;
            }
            let found = u_list.iter().any(|u| {
                u.order() * a.order() == self.order()
                    && a.elements().iter().all(|&x| x == 0 || !u.contains(x))
            });
            if found {
                best = r;
            }
        }
        Ok(best)
    }
}
