use super::{GroupAlgebra, Ideal, QuotientAlgebra};
use crate::gfq::{Scalar, Subspace};
use crate::group::Subgroup;
use crate::{Error, Result};

/// `Δ^n` from a list `Δ^1, Δ^2, …` ending in the zero ideal.
pub(crate) fn nth(list: &[Ideal], n: usize) -> &Ideal {
    debug_assert!(n >= 1);
    list.get(n - 1).unwrap_or_else(|| list.last().unwrap())
}

impl GroupAlgebra {
    /// `Δ(FG) = span{g − 1}`.
    pub fn augmentation_ideal(&self) -> Ideal {
        let space = Subspace::echelon_basis(
            self.field(),
            self.dim(),
            (1..self.dim()).map(|g| self.g_minus_one(g)),
        )
        .unwrap();
        Ideal::from_space(space)
    }

    /// `Δ^1, Δ^2, …` ending with the first zero power.
    ///
    /// `Δ^{n+1} = Δ^n·Δ` and `Δ` is generated as a left ideal by `s − 1` for
    /// the generators `s`, so `Δ^{n+1} = Σ_s Δ^n (s − 1)`: it suffices to
    /// multiply the basis of `Δ^n` by `s − 1` for generators only.
    pub fn augmentation_powers(&self) -> Vec<Ideal> {
        let f = self.field();
        let gens = self.gens();
        let mut out = vec![self.augmentation_ideal()];
        while !out.last().unwrap().is_zero() {
            let prev = out.last().unwrap().space();
            let mut next = Subspace::zero(self.dim());
            for row in prev.rows() {
                for &s in &gens {
                    let w = self.sub(&self.right_mul_group(row, s), row);
                    next.insert(f, &w).unwrap();
                }
            }
            out.push(Ideal::from_space(next));
        }
        out
    }

    /// `Δ(N)FG`, the ideal generated by `u − 1` for `u ∈ N`.
    pub fn relative_augmentation_ideal(&self, n: &Subgroup) -> Result<Ideal> {
        if n.parent_order() != self.dim() {
            return Err(Error::NotSubgroup);
        }
        if !self.group().is_normal(n) {
            return Err(Error::NotNormal);
        }
        Ok(self.ideal_closure(None, n.generators().iter().map(|&u| self.g_minus_one(u))))
    }

    /// The Lie powers `Δ^{[1]} = Δ`, `Δ^{[i+1]} = [FG, Δ^{[i]}]FG`, stopping
    /// after `i_max` terms or at the first zero term.
    pub fn lie_powers(&self, i_max: usize) -> Vec<Ideal> {
        let gens = self.gens();
        let mut out = vec![self.augmentation_ideal()];
        while out.len() < i_max && !out.last().unwrap().is_zero() {
            let prev = out.last().unwrap().space().rows().to_vec();
            let seeds = prev.iter().flat_map(|u| {
                gens.iter().map(move |&g| {
                    self.sub(&self.left_mul_group(g, u), &self.right_mul_group(u, g))
                })
            });
            let next = self.ideal_closure(None, seeds.collect::<Vec<_>>());
            out.push(next);
        }
        out
    }

    /// `Δ(FG)·I` for a two-sided ideal `I`: since `Δ = Σ_s (s − 1)FG`, this
    /// is the span of `(s − 1)w` over generators `s` and a basis of `I`.
    pub fn delta_times(&self, ideal: &Ideal) -> Ideal {
        let f = self.field();
        let mut space = Subspace::zero(self.dim());
        for w in ideal.space().rows() {
            for &s in &self.gens() {
                space
                    .insert(f, &self.sub(&self.left_mul_group(s, w), w))
                    .unwrap();
            }
        }
        Ideal::from_space(space)
    }

    /// `D_n = G ∩ (1 + Δ^n)` for `n = 1..=n_max`, given the powers of `Δ`.
    pub fn dimension_subgroups_algebraic(&self, powers: &[Ideal], n_max: usize) -> Vec<Subgroup> {
        let g = self.group();
        (1..=n_max)
            .map(|n| {
                let delta = nth(powers, n);
                let elems: Vec<usize> = (0..self.dim())
                    .filter(|&x| x == 0 || delta.contains(self, &self.g_minus_one(x)).unwrap())
                    .collect();
                g.subgroup_generated(&elems)
            })
            .collect()
    }

    /// The section `Δ^i / Δ^j` (`1 ≤ i ≤ j`) of precomputed powers, with
    /// powers beyond the list read as zero.
    pub fn power_section(&self, powers: &[Ideal], i: usize, j: usize) -> Result<QuotientAlgebra> {
        if i == 0 || i > j {
            return Err(Error::InvalidParameters(format!(
                "section Δ^{i}/Δ^{j} needs 1 ≤ i ≤ j"
            )));
        }
        QuotientAlgebra::section(self, Some(nth(powers, i)), nth(powers, j))
    }

    /// The ideal `Δ(FG)·Δ(G′)FG` defining the small group ring.
    pub fn small_group_ring_ideal(&self) -> Ideal {
        let derived = self.group().derived_subgroup();
        let rel = self.relative_augmentation_ideal(&derived).unwrap();
        self.delta_times(&rel)
    }

    /// `FG / Δ(FG)Δ(G′)FG` as a unital structure-constant algebra.
    pub fn small_group_ring(&self) -> Result<QuotientAlgebra> {
        QuotientAlgebra::section(self, None, &self.small_group_ring_ideal())
    }

    /// The Zassenhaus ideal
    /// `Z_n = Σ_{i p^j ≥ n} span{x^{p^j} : x ∈ Δ^{[i]}} + Δ^{n+1}`.
    ///
    /// The `j = 0` terms collapse to `Δ^{[n]}`, and for `j ≥ 1` only the least
    /// admissible `i` matters because the Lie powers decrease. Terms with
    /// `p^j > n` vanish modulo `Δ^{n+1}`. Modulo `Δ^{n+1}`, `x^{p^j}` only
    /// depends on `x` modulo `Δ^{[i]} ∩ Δ^m` with `m = n + 1 − (p^j − 1)i`,
    /// so only a complement of that subspace is enumerated.
    pub fn zassenhaus_ideal(
        &self,
        n: usize,
        powers: &[Ideal],
        lie: &[Ideal],
        cap: u64,
    ) -> Result<Ideal> {
        let f = self.field();
        let p = f.characteristic() as usize;
        let q = f.size() as u64;
        let mut span = nth(powers, n + 1).space().clone();
        let lie_n = lie_nth(lie, n);
        for row in lie_n.space().rows() {
            span.insert(f, row)?;
        }
        let mut pj = p;
        while pj <= n {
            let i = n.div_ceil(pj);
            let lie_i = lie_nth(lie, i);
            let stable = n + 1;
            let m = stable.saturating_sub((pj - 1) * i).max(1);
            if m > i {
                let k = lie_i.space().combine(
                    f,
                    nth(powers, m).space(),
                    crate::gfq::CombineMode::Intersection,
                )?;
                let mut ext = k.clone();
                let complement: Vec<Vec<Scalar>> = lie_i
                    .space()
                    .rows()
                    .iter()
                    .filter(|r| ext.insert(f, r).unwrap())
                    .cloned()
                    .collect();
                let d = complement.len() as u32;
                let count =
                    q.checked_pow(d)
                        .filter(|&c| c <= cap)
                        .ok_or(Error::EnumerationCap {
                            cap,
                            what: "Zassenhaus power span",
                        })?;
                for idx in 1..count {
                    let mut x = self.zero();
                    let mut t = idx;
                    for r in &complement {
                        let c = Scalar((t % q) as u8);
                        t /= q;
                        f.axpy(&mut x, c, r);
                    }
                    let y = self.pow(&x, pj as u64);
                    span.insert(f, &y)?;
                }
            }
            pj *= p;
        }
        Ok(Ideal::from_space(span))
    }
}

fn lie_nth(lie: &[Ideal], i: usize) -> &Ideal {
    match lie.get(i - 1) {
        Some(l) => l,
        None => {
            let last = lie.last().unwrap();
            assert!(last.is_zero(), "Lie powers not computed far enough");
            last
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::gfq::FiniteField;
    use crate::Caps;

    fn algebra(spec: &str, p: u32, k: u32) -> GroupAlgebra {
        let g = FamilySpec::parse(spec)
            .unwrap()
            .build(&Caps::default())
            .unwrap();
        GroupAlgebra::new(g, FiniteField::new(p, k).unwrap()).unwrap()
    }

    fn dims(list: &[Ideal]) -> Vec<usize> {
        list.iter().map(|i| i.dim()).collect()
    }

    #[test]
    fn dihedral_powers() {
        assert_eq!(
            dims(&algebra("D8", 2, 1).augmentation_powers()),
            vec![7, 5, 3, 1, 0]
        );
        assert_eq!(
            dims(&algebra("D8", 2, 2).augmentation_powers()),
            vec![7, 5, 3, 1, 0]
        );
        assert_eq!(
            dims(&algebra("C:3", 3, 1).augmentation_powers()),
            vec![2, 1, 0]
        );
    }

    #[test]
    fn dihedral_lie_and_relative() {
        let fg = algebra("D8", 2, 1);
        let lie = fg.lie_powers(10);
        let rel = fg
            .relative_augmentation_ideal(&fg.group().derived_subgroup())
            .unwrap();
        assert_eq!(lie[1], rel);
        assert_eq!(rel.dim(), 4);
        assert!(rel.is_two_sided(&fg));
        assert_eq!(fg.small_group_ring_ideal().dim(), 3);
        let ab = algebra("C:4", 2, 1);
        assert!(ab.lie_powers(3)[1].is_zero());
    }

    #[test]
    fn zassenhaus_small() {
        let fg = algebra("D8", 2, 1);
        let powers = fg.augmentation_powers();
        let lie = fg.lie_powers(usize::MAX);
        let z1 = fg.zassenhaus_ideal(1, &powers, &lie, 1 << 20).unwrap();
        assert_eq!(z1, powers[0]);
        let z2 = fg.zassenhaus_ideal(2, &powers, &lie, 1 << 20).unwrap();
        assert_eq!(z2.dim(), 4);
    }
}
