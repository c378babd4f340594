//! The battery of invariants of a modular group algebra `FG` that can be
//! read off from `G` or from small quotients of `FG`.

mod compare;
mod fingerprint;

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::group::{AbelianType, FiniteGroup};
use crate::Result;

pub use compare::{compare, Difference, Verdict};
pub use fingerprint::{
    fingerprint, fingerprint_with, Avail, ClassEntry, FieldSpec, Fingerprint, FingerprintOptions,
    KernelEntry, RankCounts,
};

/// `dim HH¹(FG) = Σ_{classes} log_p |C_G(g) : Frat(C_G(g))|`.
pub fn hh1_dimension(g: &FiniteGroup) -> Result<usize> {
    Ok(hh1_breakdown(g)?.values().map(|c| c.contribution).sum())
}

/// The classes of one centraliser order and what they add to `dim HH¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hh1Part {
    pub classes: usize,
    pub class_length: usize,
    pub contribution: usize,
}

/// [`hh1_dimension`] split by centraliser order.
pub fn hh1_breakdown(g: &FiniteGroup) -> Result<BTreeMap<usize, Hh1Part>> {
    g.require_p_group()?;
    let mut out: BTreeMap<usize, Hh1Part> = BTreeMap::new();
    for (class, cent) in g.classes_with_centralizers() {
        let part = out.entry(cent.order()).or_insert(Hh1Part {
            classes: 0,
            class_length: class.length,
            contribution: 0,
        });
        part.classes += 1;
        part.contribution += g.min_generators(&cent);
    }
    Ok(out)
}

/// Power statistics of conjugacy classes for one `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPowerStats {
    pub k: u32,
    /// Number of distinct sets `C^{p^k}`.
    pub sets: usize,
    /// Number of distinct sets `C^{p^k}` with `|C^{p^k}| = |C|`.
    pub size_preserving: usize,
}

/// Both counts are over sets, so a power set reached from several classes
/// is counted once, and it counts as size preserving if it is reached from
/// at least one class of the same size.
pub fn class_power_stats(g: &FiniteGroup, k: u32) -> Result<ClassPowerStats> {
    let p = g.require_p_group()? as i64;
    let e = p.pow(k);
    let mut sets = BTreeSet::new();
    let mut preserving = BTreeSet::new();
    for c in g.conjugacy_classes() {
        let power: BTreeSet<usize> = c.elems.iter().map(|&x| g.pow(x, e)).collect();
        if power.len() == c.length {
            preserving.insert(power.clone());
        }
        sets.insert(power);
    }
    Ok(ClassPowerStats {
        k,
        sets: sets.len(),
        size_preserving: preserving.len(),
    })
}

/// The six abelian sections attached to one `k`, with `A = ℧_k(G)G′`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferSections {
    pub k: u32,
    /// `Z(G) ∩ A`.
    pub center_cap_agemo: AbelianType,
    /// `Z(G)A / A`.
    pub center_over_agemo: AbelianType,
    /// `G / ℧_k(Z(G))G′`.
    pub group_over_center_agemo: AbelianType,
    /// `℧_k(Z(G))G′ / G′`.
    pub center_agemo_over_derived: AbelianType,
    /// `G / Ω_k(Z(G))G′`.
    pub group_over_center_omega: AbelianType,
    /// `Ω_k(Z(G))G′ / G′`.
    pub center_omega_over_derived: AbelianType,
}

/// Least `k` with `℧_k(G) = 1`, i.e. `log_p exp(G)`.
pub fn default_transfer_depth(g: &FiniteGroup) -> Result<u32> {
    let p = g.require_p_group()?;
    Ok(crate::group::log_p(g.exponent(), p))
}

/// The sections for `k = 0, …, k_max`.
pub fn transfer_sections(g: &FiniteGroup, k_max: u32) -> Result<Vec<TransferSections>> {
    g.require_p_group()?;
    let whole = g.whole();
    let z = g.center();
    let d = g.derived_subgroup();
    (0..=k_max)
        .map(|k| {
            let a = g.join(&g.agemo_of(&whole, k), &d);
            let za = g.join(&z, &a);
            let zb = g.join(&g.agemo_of(&z, k), &d);
            let zc = g.join(&g.omega_of(&z, k), &d);
            Ok(TransferSections {
                k,
                center_cap_agemo: g.subgroup_type(&g.intersection(&z, &a))?,
                center_over_agemo: g.section_type(&za, &a)?,
                group_over_center_agemo: g.section_type(&whole, &zb)?,
                center_agemo_over_derived: g.section_type(&zb, &d)?,
                group_over_center_omega: g.section_type(&whole, &zc)?,
                center_omega_over_derived: g.section_type(&zc, &d)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::Caps;

    fn build(s: &str) -> FiniteGroup {
        FamilySpec::parse(s)
            .unwrap()
            .build(&Caps::default())
            .unwrap()
    }

    #[test]
    fn dihedral_and_quaternion() {
        let d8 = build("D8");
        let q8 = build("Q8");
        assert_eq!(hh1_dimension(&d8).unwrap(), 9);
        assert_eq!(hh1_dimension(&q8).unwrap(), 7);
        // Squares of classes: {1},{1},{z},{1},{1}. Only {1} is reached from
        // a class of its own size.
        for g in [&d8, &q8] {
            let s = class_power_stats(g, 1).unwrap();
            assert_eq!((s.sets, s.size_preserving), (2, 1));
            let t = &transfer_sections(g, 0).unwrap()[0];
            assert_eq!(t.center_cap_agemo.orders(), &[2]);
            assert!(t.center_over_agemo.is_trivial());
            assert_eq!(t.group_over_center_agemo.orders(), &[2, 2]);
        }
    }

    #[test]
    fn cyclic_of_order_two() {
        let c2 = build("C:2");
        let s = class_power_stats(&c2, 1).unwrap();
        assert_eq!((s.sets, s.size_preserving), (1, 1));
        assert_eq!(default_transfer_depth(&c2).unwrap(), 1);
    }
}
