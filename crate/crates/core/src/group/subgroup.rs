use std::hash::{Hash, Hasher};

/// A subgroup of some [`FiniteGroup`](super::FiniteGroup), stored as the
/// sorted list of its element indices in the parent together with a
/// membership bitmap and a small generating set.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elems: Vec<usize>,
    mask: Vec<bool>,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl Subgroup {
    /// Wraps an element set already known to be a subgroup. `gens` must
    /// generate it.
    pub(crate) fn from_parts(parent_order: usize, mut elems: Vec<usize>, gens: Vec<usize>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        let mut mask = vec![false; parent_order];
        for &e in &elems {
            mask[e] = true;
        }
        Subgroup { elems, mask, gens }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }

    pub(crate) fn mask(&self) -> &[bool] {
        &self.mask
    }
}
