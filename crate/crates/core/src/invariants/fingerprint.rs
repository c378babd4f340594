use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::{
    class_power_stats, default_transfer_depth, hh1_dimension, ClassPowerStats, TransferSections,
};
use crate::gfq::FiniteField;
use crate::group::{AbelianType, FiniteGroup};
use crate::modalg::{GroupAlgebra, KernelSize};
use crate::{Caps, Error, Result};

/// A value, or the name of the cap (or restriction) that prevented
/// computing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Avail<T> {
    Unavailable { unavailable: String },
    Value(T),
}

impl<T> Avail<T> {
    pub fn unavailable(reason: impl Into<String>) -> Self {
        Avail::Unavailable {
            unavailable: reason.into(),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Avail::Value(v) => Some(v),
            Avail::Unavailable { .. } => None,
        }
    }

    /// Turns a cap error into `Unavailable(cap)`; other errors propagate.
    fn from_result(r: Result<T>, cap: &str) -> Result<Self> {
        match r {
            Ok(v) => Ok(Avail::Value(v)),
            Err(e) if e.is_cap() => Ok(Avail::unavailable(cap)),
            Err(e) => Err(e),
        }
    }
}

/// Number of conjugacy classes of maximal elementary abelian subgroups per
/// rank. Serialised as a JSON object with decimal string keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCounts(pub BTreeMap<u32, usize>);

impl Serialize for RankCounts {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(k, v)| (k.to_string(), v)))
    }
}

impl<'de> Deserialize<'de> for RankCounts {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                k.parse::<u32>()
                    .map(|k| (k, v))
                    .map_err(serde::de::Error::custom)
            })
            .collect::<std::result::Result<_, _>>()
            .map(RankCounts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
}

/// Nilpotency class together with the conditions under which it is known
/// to be determined by the group algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub class: usize,
    pub exponent_p: bool,
    pub derived_cyclic: bool,
    pub class_two: bool,
    pub maximal_class: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelEntry {
    pub i: usize,
    pub j: usize,
    pub k: u32,
    pub counts: Avail<KernelSize>,
}

/// Everything the comparator knows about `(G, F)`. Serialises to one JSON
/// object whose keys appear in field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub field: FieldSpec,
    pub order: usize,
    pub abelianization: AbelianType,
    pub center_type: AbelianType,
    pub jennings_factors: Vec<AbelianType>,
    pub min_gens: usize,
    pub exponent: usize,
    pub class_power_stats: Vec<ClassPowerStats>,
    pub hh1_dim: usize,
    pub max_elem_ab_classes: Avail<RankCounts>,
    pub transfer_sections: Vec<TransferSections>,
    pub nilpotency_class: ClassEntry,
    /// `dim Δⁿ/Δⁿ⁺¹` for `n = 1, 2, …` until the quotients vanish.
    pub jennings_dims: Avail<Vec<usize>>,
    pub kernel_sizes: Vec<KernelEntry>,
    pub elem_ab_direct_factor_rank: Avail<u32>,
    pub small_group_ring_dim: Avail<usize>,
    pub zassenhaus_dims: Avail<Vec<usize>>,
}

impl Fingerprint {
    /// Entry names in serialisation order.
    pub const ENTRIES: [&'static str; 17] = [
        "field",
        "order",
        "abelianization",
        "center_type",
        "jennings_factors",
        "min_gens",
        "exponent",
        "class_power_stats",
        "hh1_dim",
        "max_elem_ab_classes",
        "transfer_sections",
        "nilpotency_class",
        "jennings_dims",
        "kernel_sizes",
        "elem_ab_direct_factor_rank",
        "small_group_ring_dim",
        "zassenhaus_dims",
    ];

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fingerprints serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FingerprintOptions {
    /// Sections `Δ^i/Δ^j` and exponents `k` for the kernel of `x ↦ x^{p^k}`.
    pub kernel_sections: Vec<(usize, usize, u32)>,
    /// Largest `k` for the transfer sections; `None` means `log_p exp(G)`.
    pub transfer_depth: Option<u32>,
}

impl Default for FingerprintOptions {
    fn default() -> Self {
        FingerprintOptions {
            kernel_sections: vec![(1, 2, 1), (1, 3, 1), (2, 3, 1), (1, 3, 2)],
            transfer_depth: None,
        }
    }
}

pub fn fingerprint(g: &FiniteGroup, field: &FiniteField, caps: &Caps) -> Result<Fingerprint> {
    fingerprint_with(g, field, caps, &FingerprintOptions::default())
}

pub fn fingerprint_with(
    g: &FiniteGroup,
    field: &FiniteField,
    caps: &Caps,
    opts: &FingerprintOptions,
) -> Result<Fingerprint> {
    let p = g.require_p_group()?;
    if p != field.characteristic() {
        return Err(Error::InvalidParameters(format!(
            "{field} does not have characteristic {p}"
        )));
    }
    let whole = g.whole();
    let derived = g.derived_subgroup();
    let center = g.center();
    let class = g.nilpotency_class()?;
    let exponent = g.exponent();
    let log_exp = default_transfer_depth(g)?;
    let jennings = g.jennings_series()?;
    let jennings_factors = jennings
        .windows(2)
        .map(|w| g.section_type(&w[0], &w[1]))
        .collect::<Result<Vec<_>>>()?;
    let n = crate::group::log_p(g.order(), p) as usize;

    let (group_side, algebra_side) = rayon::join(
        || -> Result<_> {
            Ok((
                (0..=log_exp)
                    .map(|k| class_power_stats(g, k))
                    .collect::<Result<Vec<_>>>()?,
                hh1_dimension(g)?,
                Avail::from_result(
                    g.maximal_elem_abelian_classes(caps.elem_abelian)
                        .map(RankCounts),
                    "elem_abelian",
                )?,
                super::transfer_sections(g, opts.transfer_depth.unwrap_or(log_exp))?,
                Avail::from_result(
                    g.max_elem_abelian_direct_factor(caps.direct_factor_order),
                    "direct_factor_order",
                )?,
            ))
        },
        || algebra_entries(g, field, caps, opts, jennings.len().saturating_sub(1)),
    );
    let (class_power_stats, hh1_dim, max_elem_ab_classes, transfer_sections, direct_factor) =
        group_side?;
    let (jennings_dims, kernel_sizes, small_group_ring_dim, zassenhaus_dims) = algebra_side?;

    Ok(Fingerprint {
        field: FieldSpec {
            p,
            k: field.degree(),
        },
        order: g.order(),
        abelianization: g.section_type(&whole, &derived)?,
        center_type: g.subgroup_type(&center)?,
        jennings_factors,
        min_gens: g.min_generators(&whole),
        exponent,
        class_power_stats,
        hh1_dim,
        max_elem_ab_classes,
        transfer_sections,
        nilpotency_class: ClassEntry {
            class,
            exponent_p: exponent as u32 == p,
            derived_cyclic: g.subgroup_as_group(&derived).is_cyclic(),
            class_two: class == 2,
            maximal_class: n >= 3 && class == n - 1,
        },
        jennings_dims,
        kernel_sizes,
        elem_ab_direct_factor_rank: direct_factor,
        small_group_ring_dim,
        zassenhaus_dims,
    })
}

type AlgebraEntries = (
    Avail<Vec<usize>>,
    Vec<KernelEntry>,
    Avail<usize>,
    Avail<Vec<usize>>,
);

/// Entries that need `FG` itself. `jennings_len` is the number of nontrivial
/// dimension subgroups, which bounds the Zassenhaus ideals worth computing.
fn algebra_entries(
    g: &FiniteGroup,
    field: &FiniteField,
    caps: &Caps,
    opts: &FingerprintOptions,
    jennings_len: usize,
) -> Result<AlgebraEntries> {
    if g.order() > caps.algebra_order || g.order() > caps.ambient_dim {
        let cap = if g.order() > caps.algebra_order {
            "algebra_order"
        } else {
            "ambient_dim"
        };
        let kernel = opts
            .kernel_sections
            .iter()
            .map(|&(i, j, k)| KernelEntry {
                i,
                j,
                k,
                counts: Avail::unavailable(cap),
            })
            .collect();
        return Ok((
            Avail::unavailable(cap),
            kernel,
            Avail::unavailable(cap),
            Avail::unavailable(cap),
        ));
    }
    let fg = GroupAlgebra::with_caps(g.clone(), field.clone(), caps)?;
    let powers = fg.augmentation_powers();
    let dims: Vec<usize> = powers.windows(2).map(|w| w[0].dim() - w[1].dim()).collect();

    let kernel = opts
        .kernel_sections
        .iter()
        .map(|&(i, j, k)| {
            let section = fg.power_section(&powers, i, j)?;
            Ok(KernelEntry {
                i,
                j,
                k,
                counts: Avail::from_result(
                    section.kernel_size(k, caps.enumeration),
                    "enumeration",
                )?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let small = g.order() - fg.small_group_ring_ideal().dim();

    let zassenhaus = if field.is_prime_field() {
        let lie = fg.lie_powers(jennings_len.max(1));
        Avail::from_result(
            (1..=jennings_len)
                .map(|n| {
                    Ok(fg
                        .zassenhaus_ideal(n, &powers, &lie, caps.enumeration)?
                        .dim())
                })
                .collect(),
            "enumeration",
        )?
    } else {
        Avail::unavailable("prime_field_only")
    };
    Ok((Avail::Value(dims), kernel, Avail::Value(small), zassenhaus))
}
