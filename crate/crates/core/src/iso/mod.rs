//! Exhaustive isomorphism search with independently checkable witnesses.
//!
//! Both searches prune candidate images only by isomorphism invariants
//! (element order and class length for groups, annihilator dimensions for
//! algebras), so a [`IsoOutcome::NotIsomorphic`] answer is a proof. Among all
//! accepting assignments the lexicographically least one is returned.

mod algebra;
mod group;

use serde::Serialize;

use crate::gfq::matrix::Matrix;
use crate::gfq::Scalar;

pub use algebra::{nilpotent_algebra_iso, verify_algebra_witness};
pub use group::{group_isomorphic, verify_group_witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IsoWitness {
    /// `images[i]` is the image of the `i`-th presentation generator of the
    /// source group; `map` is the induced bijection on element indices.
    Group { images: Vec<usize>, map: Vec<usize> },
    /// `images[i]` is the image of `generators[i]` (coordinates in the
    /// source); `matrix` is the induced linear map on row vectors.
    Algebra {
        #[serde(serialize_with = "serialize_rows")]
        generators: Vec<Vec<Scalar>>,
        #[serde(serialize_with = "serialize_rows")]
        images: Vec<Vec<Scalar>>,
        #[serde(serialize_with = "serialize_rows")]
        matrix: Matrix,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(IsoWitness),
    NotIsomorphic,
}

impl IsoOutcome {
    pub fn witness(&self) -> Option<&IsoWitness> {
        match self {
            IsoOutcome::Isomorphic(w) => Some(w),
            IsoOutcome::NotIsomorphic => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

fn serialize_rows<S: serde::Serializer>(rows: &[Vec<Scalar>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        seq.serialize_element(&r.iter().map(|c| c.0).collect::<Vec<u8>>())?;
    }
    seq.end()
}

/// Either side of an isomorphism question.
#[derive(Debug, Clone, Copy)]
pub enum IsoObject<'a> {
    Group(&'a crate::group::FiniteGroup),
    Algebra(&'a crate::modalg::QuotientAlgebra),
}

/// Checks a witness against the objects it claims to relate, recomputing
/// the full map; the search that produced it is never trusted.
pub fn verify_witness(
    w: &IsoWitness,
    source: IsoObject<'_>,
    target: IsoObject<'_>,
) -> crate::Result<bool> {
    match (source, target) {
        (IsoObject::Group(g), IsoObject::Group(h)) => verify_group_witness(w, g, h),
        (IsoObject::Algebra(a), IsoObject::Algebra(b)) => verify_algebra_witness(w, a, b),
        _ => Err(crate::Error::ShapeMismatch(
            "cannot relate a group and an algebra".into(),
        )),
    }
}
