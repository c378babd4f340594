use crate::gfq::{FiniteField, Scalar, Subspace};
use crate::group::FiniteGroup;
use crate::{Caps, Error, Result};

/// The group algebra `FG`. Elements are coefficient vectors indexed by group
/// element indices.
#[derive(Debug, Clone)]
pub struct GroupAlgebra {
    group: FiniteGroup,
    field: FiniteField,
}

/// A two-sided ideal of `FG`, stored as a subspace of the coefficient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub(crate) fn from_space(space: Subspace) -> Self {
        Ideal { space }
    }

    pub fn zero(ambient: usize) -> Self {
        Ideal {
            space: Subspace::zero(ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, fg: &GroupAlgebra, v: &[Scalar]) -> Result<bool> {
        self.space.contains(fg.field(), v)
    }

    pub fn is_subset_of(&self, fg: &GroupAlgebra, other: &Ideal) -> bool {
        self.space
            .is_subspace_of(fg.field(), &other.space)
            .unwrap_or(false)
    }

    /// Checks closure under left and right multiplication by every group
    /// element on the echelon basis.
    pub fn is_two_sided(&self, fg: &GroupAlgebra) -> bool {
        let f = fg.field();
        (0..fg.dim()).all(|g| {
            self.space.rows().iter().all(|r| {
                self.space.contains(f, &fg.left_mul_group(g, r)).unwrap()
                    && self.space.contains(f, &fg.right_mul_group(r, g)).unwrap()
            })
        })
    }
}

impl GroupAlgebra {
    /// `FG` for a p-group `G` and a field of characteristic `p`.
    pub fn new(group: FiniteGroup, field: FiniteField) -> Result<Self> {
        if group.order() > 1 && group.prime() != Some(field.characteristic()) {
            return Err(Error::InvalidParameters(format!(
                "{field} does not have the characteristic of a group of order {}",
                group.order()
            )));
        }
        Ok(GroupAlgebra { group, field })
    }

    pub fn with_caps(group: FiniteGroup, field: FiniteField, caps: &Caps) -> Result<Self> {
        if group.order() > caps.ambient_dim {
            return Err(Error::AmbientCap {
                dim: group.order(),
                cap: caps.ambient_dim,
            });
        }
        Self::new(group, field)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::ZERO; self.dim()]
    }

    pub fn basis_element(&self, g: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[g] = Scalar::ONE;
        v
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.basis_element(0)
    }

    /// `g − 1`.
    pub fn g_minus_one(&self, g: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[0] = self.field.sub(v[0], Scalar::ONE);
        v[g] = self.field.add(v[g], Scalar::ONE);
        v
    }

    /// `g · x`.
    pub fn left_mul_group(&self, g: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (h, &c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.group.mul(g, h)] = c;
            }
        }
        out
    }

    /// `x · g`.
    pub fn right_mul_group(&self, x: &[Scalar], g: usize) -> Vec<Scalar> {
        let mut out = self.zero();
        for (h, &c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.group.mul(h, g)] = c;
            }
        }
        out
    }

    /// Convolution product `(xy)[g] = Σ_h x[h] y[h⁻¹g]`.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.zero();
        let ysupp: Vec<(usize, Scalar)> = y
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (k, c))
            .collect();
        for (h, &a) in x.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for &(k, b) in &ysupp {
                let t = self.group.mul(h, k);
                out[t] = self.field.add(out[t], self.field.mul(a, b));
            }
        }
        out
    }

    pub fn sub(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect()
    }

    pub fn pow(&self, x: &[Scalar], mut e: u64) -> Vec<Scalar> {
        let mut acc = self.one();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// The coefficient sum.
    pub fn augmentation(&self, x: &[Scalar]) -> Scalar {
        x.iter()
            .fold(Scalar::ZERO, |acc, &c| self.field.add(acc, c))
    }

    pub(crate) fn gens(&self) -> Vec<usize> {
        self.group.nontrivial_generators()
    }

    /// Smallest two-sided ideal containing `base` (already an ideal) and
    /// `seeds`. Every vector added to the span is multiplied on both sides
    /// by the group generators; since the generators generate `G` as a
    /// monoid this closes the span under all of `G`.
    pub fn ideal_closure(
        &self,
        base: Option<&Ideal>,
        seeds: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Ideal {
        let f = &self.field;
        let mut space = base.map_or_else(|| Subspace::zero(self.dim()), |b| b.space.clone());
        let gens = self.gens();
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for s in seeds {
            if space.insert(f, &s).unwrap() {
                queue.push(s);
            }
        }
        while let Some(v) = queue.pop() {
            for &g in &gens {
                for w in [self.left_mul_group(g, &v), self.right_mul_group(&v, g)] {
                    if space.insert(f, &w).unwrap() {
                        queue.push(w);
                    }
                }
            }
        }
        Ideal { space }
    }
}
