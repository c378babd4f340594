use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{GroupAlgebra, Ideal};
use crate::gfq::{matrix, FiniteField, Scalar, Subspace};
use crate::{Error, Result};

/// A finite-dimensional algebra given by structure constants, usually a
/// section `I/J` of a group algebra.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    field: FiniteField,
    dim: usize,
    /// `sc[i * dim + j]` lists the nonzero coordinates of `e_i e_j`.
    sc: Vec<Vec<(u32, Scalar)>>,
    /// Representatives in the ambient group algebra, when there is one.
    lifts: Vec<Vec<Scalar>>,
    unit: Option<Vec<Scalar>>,
    /// `(J, image of I mod J)` for sections, used to map ambient vectors to
    /// coordinates.
    embedding: Option<(Subspace, Subspace)>,
}

/// Result of counting the kernel of `x ↦ x^{p^k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KernelSize {
    /// Elements with `x^{p^k} = 0`.
    pub kernel: u64,
    /// Elements with `x^{p^k} ≠ 0`.
    pub nonzero: u64,
}

impl QuotientAlgebra {
    /// The section `I/J` of `FG`; `I = None` means all of `FG`, giving a
    /// unital algebra. The basis is the reduced echelon basis of the image
    /// of `I` after sifting by `J`, in pivot order.
    pub fn section(fg: &GroupAlgebra, i: Option<&Ideal>, j: &Ideal) -> Result<Self> {
        let f = fg.field();
        let n = fg.dim();
        let full;
        let i_space = match i {
            Some(i) => i.space(),
            None => {
                full = Subspace::full(n);
                &full
            }
        };
        if !j.space().is_subspace_of(f, i_space)? {
            return Err(Error::NotContained("J is not contained in I"));
        }
        let jsp = j.space();
        let mut image = Subspace::zero(n);
        for row in i_space.rows() {
            let mut v = row.clone();
            jsp.reduce(f, &mut v);
            image.insert(f, &v)?;
        }
        let lifts: Vec<Vec<Scalar>> = image.rows().to_vec();
        let dim = lifts.len();
        let coords = |v: &[Scalar]| -> Vec<Scalar> {
            let mut w = v.to_vec();
            jsp.reduce(f, &mut w);
            image.pivots().iter().map(|&p| w[p]).collect()
        };
        let sc: Vec<Vec<(u32, Scalar)>> = (0..dim * dim)
            .into_par_iter()
            .map(|idx| {
                let prod = fg.mul(&lifts[idx / dim], &lifts[idx % dim]);
                sparse(&coords(&prod))
            })
            .collect();
        let unit = i.is_none().then(|| coords(&fg.one()));
        Ok(QuotientAlgebra {
            field: f.clone(),
            dim,
            sc,
            lifts,
            unit,
            embedding: Some((jsp.clone(), image)),
        })
    }

    /// An abstract algebra from dense structure constants:
    /// `sc[i][j]` is the coordinate vector of `e_i e_j`.
    pub fn from_structure_constants(field: FiniteField, sc: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        let dim = sc.len();
        let mut flat = Vec::with_capacity(dim * dim);
        for row in sc {
            if row.len() != dim {
                return Err(Error::ShapeMismatch(
                    "structure constants are not square".into(),
                ));
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                flat.push(sparse(v));
            }
        }
        Ok(QuotientAlgebra {
            field,
            dim,
            sc: flat,
            lifts: Vec::new(),
            unit: None,
            embedding: None,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    /// Ambient representatives of the basis (empty for abstract algebras).
    pub fn lifts(&self) -> &[Vec<Scalar>] {
        &self.lifts
    }

    /// Coordinates of the class of an ambient vector `v ∈ I`. Only available
    /// for sections built by [`section`](Self::section) (and not after a
    /// change of basis).
    pub fn coordinates_of(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let (j, image) = self.embedding.as_ref().ok_or(Error::NoEmbedding)?;
        let mut w = v.to_vec();
        j.reduce(&self.field, &mut w);
        image
            .coordinates(&self.field, &w)?
            .ok_or(Error::NotContained("vector is not in the section"))
    }

    /// Coordinates of `e_i e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.dim];
        for &(k, c) in &self.sc[i * self.dim + j] {
            v[k as usize] = c;
        }
        v
    }

    /// Dense structure constants `[i][j] ↦ coords(e_i e_j)`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.product_of_basis(i, j)).collect())
            .collect()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![Scalar::ZERO; self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = Scalar::ONE;
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.sc[i * self.dim + j] {
                    let k = k as usize;
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// `x^e` for `e ≥ 1`.
    pub fn pow(&self, x: &[Scalar], mut e: u64) -> Vec<Scalar> {
        assert!(e >= 1);
        let mut acc: Option<Vec<Scalar>> = None;
        let mut base = x.to_vec();
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => self.mul(&a, &base),
                });
            }
            e >>= 1;
            if e == 0 {
                return acc.unwrap();
            }
            base = self.mul(&base, &base);
        }
    }

    /// `A^1 ⊇ A^2 ⊇ …` as coordinate subspaces, ending with the zero space.
    pub fn power_spaces(&self) -> Result<Vec<Subspace>> {
        let f = &self.field;
        let mut out = vec![Subspace::full(self.dim)];
        while !out.last().unwrap().is_zero() {
            let prev = out.last().unwrap();
            let mut next = Subspace::zero(self.dim);
            for r in prev.rows() {
                for j in 0..self.dim {
                    next.insert(f, &self.mul(r, &self.basis_element(j)))?;
                }
            }
            if next.dim() == prev.dim() {
                return Err(Error::NotNilpotent);
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Least `c` with `A^c = 0`.
    pub fn nilpotency_degree(&self) -> Result<usize> {
        Ok(self.power_spaces()?.len())
    }

    /// The same algebra on a new basis whose vectors are the rows of
    /// `basis`, given in old coordinates.
    pub fn change_basis(&self, basis: &[Vec<Scalar>]) -> Result<Self> {
        if basis.len() != self.dim || basis.iter().any(|r| r.len() != self.dim) {
            return Err(Error::ShapeMismatch("basis change must be square".into()));
        }
        let inv = matrix::inverse(&self.field, basis)
            .ok_or_else(|| Error::ShapeMismatch("basis change is singular".into()))?;
        let f = &self.field;
        let mut sc = Vec::with_capacity(self.dim * self.dim);
        for a in basis {
            for b in basis {
                sc.push(sparse(&matrix::vec_mul(f, &self.mul(a, b), &inv)));
            }
        }
        let lifts = if self.lifts.is_empty() {
            Vec::new()
        } else {
            basis
                .iter()
                .map(|r| {
                    let mut v = vec![Scalar::ZERO; self.lifts[0].len()];
                    for (&c, l) in r.iter().zip(&self.lifts) {
                        f.axpy(&mut v, c, l);
                    }
                    v
                })
                .collect()
        };
        let unit = self.unit.as_ref().map(|u| matrix::vec_mul(f, u, &inv));
        Ok(QuotientAlgebra {
            field: self.field.clone(),
            dim: self.dim,
            sc,
            lifts,
            unit,
            embedding: None,
        })
    }

    /// Checks `(e_i e_j) e_k = e_i (e_j e_k)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let ij = self.product_of_basis(i, j);
                (0..self.dim).all(|k| {
                    self.mul(&ij, &self.basis_element(k))
                        == self.mul(&self.basis_element(i), &self.product_of_basis(j, k))
                })
            })
        })
    }

    /// Counts the elements with `x^{p^k} = 0`.
    ///
    /// For a nilpotent algebra with `A^c = 0` and `N = p^k`, replacing `x` by
    /// `x + b` with `b ∈ A^m` changes `x^N` by an element of `A^{m+N−1}`,
    /// so `x^N` only depends on `x` modulo `A^m` for `m = c − N + 1` and only
    /// a complement of `A^m` is enumerated. `cap` bounds the number of
    /// elements actually enumerated.
    pub fn kernel_size(&self, k: u32, cap: u64) -> Result<KernelSize> {
        let f = &self.field;
        let q = f.size() as u64;
        let total = q
            .checked_pow(self.dim as u32)
            .ok_or(Error::EnumerationCap {
                cap,
                what: "kernel size",
            })?;
        let n_pow = (f.characteristic() as u64)
            .checked_pow(k)
            .ok_or(Error::EnumerationCap {
                cap,
                what: "kernel size",
            })?;
        let (free, fixed) = match self.power_spaces() {
            Ok(spaces) => {
                let c = spaces.len() as u64;
                if n_pow >= c {
                    return Ok(KernelSize {
                        kernel: total,
                        nonzero: 0,
                    });
                }
                let m = (c - n_pow + 1) as usize;
                let am = &spaces[m - 1];
                let free: Vec<usize> = (0..self.dim).filter(|j| !am.pivots().contains(j)).collect();
                (free, am.dim() as u32)
            }
            Err(Error::NotNilpotent) => ((0..self.dim).collect(), 0),
            Err(e) => return Err(e),
        };
        let count = q
            .checked_pow(free.len() as u32)
            .filter(|&c| c <= cap)
            .ok_or(Error::EnumerationCap {
                cap,
                what: "kernel size",
            })?;
        let kernel_reps: u64 = (0..count)
            .into_par_iter()
            .filter(|&idx| {
                let mut x = self.zero();
                let mut t = idx;
                for &j in &free {
                    x[j] = Scalar((t % q) as u8);
                    t /= q;
                }
                self.pow(&x, n_pow).iter().all(|c| c.is_zero())
            })
            .count() as u64;
        let kernel = kernel_reps * q.pow(fixed);
        Ok(KernelSize {
            kernel,
            nonzero: total - kernel,
        })
    }

    /// Brute-force kernel count over all `q^dim` elements, without any
    /// reduction. Intended for cross-checks on small algebras.
    pub fn kernel_size_exhaustive(&self, k: u32) -> KernelSize {
        let f = &self.field;
        let q = f.size() as u64;
        let n_pow = (f.characteristic() as u64).pow(k);
        let total = q.pow(self.dim as u32);
        let kernel = (0..total)
            .filter(|&idx| {
                let mut x = self.zero();
                let mut t = idx;
                for c in x.iter_mut() {
                    *c = Scalar((t % q) as u8);
                    t /= q;
                }
                self.pow(&x, n_pow).iter().all(|c| c.is_zero())
            })
            .count() as u64;
        KernelSize {
            kernel,
            nonzero: total - kernel,
        }
    }
}

fn sparse(v: &[Scalar]) -> Vec<(u32, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, &c)| (k as u32, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::Caps;

    fn section(spec: &str, q: (u32, u32), i: usize, j: usize) -> QuotientAlgebra {
        let g = FamilySpec::parse(spec)
            .unwrap()
            .build(&Caps::default())
            .unwrap();
        let fg = GroupAlgebra::new(g, FiniteField::new(q.0, q.1).unwrap()).unwrap();
        let pw = fg.augmentation_powers();
        QuotientAlgebra::section(
            &fg,
            Some(super::super::ideals::nth(&pw, i)),
            super::super::ideals::nth(&pw, j),
        )
        .unwrap()
    }

    #[test]
    fn lambda_gamma_counts() {
        let lambda = section("D8", (2, 1), 1, 3);
        let gamma = section("Q8", (2, 1), 1, 3);
        assert_eq!(lambda.dim(), 4);
        assert_eq!(lambda.nilpotency_degree().unwrap(), 3);
        assert_eq!(
            lambda.kernel_size(1, 1 << 20).unwrap(),
            KernelSize {
                kernel: 12,
                nonzero: 4
            }
        );
        // x, y and x + y all square to x² ≠ 0 modulo Γ², so only Γ² is killed.
        assert_eq!(
            gamma.kernel_size(1, 1 << 20).unwrap(),
            KernelSize {
                kernel: 4,
                nonzero: 12
            }
        );
        assert_eq!(
            gamma.kernel_size_exhaustive(1),
            KernelSize {
                kernel: 4,
                nonzero: 12
            }
        );
        assert_eq!(
            lambda.kernel_size_exhaustive(1),
            KernelSize {
                kernel: 12,
                nonzero: 4
            }
        );
        assert!(lambda.is_associative());
    }

    #[test]
    fn square_zero_all_kill() {
        let a = section("D8", (2, 1), 2, 4);
        // (Δ²)² = Δ⁴ ⊆ J
        assert_eq!(a.kernel_size(1, 16).unwrap().nonzero, 0);
    }

    #[test]
    fn unital_quotient_has_unit() {
        let g = FamilySpec::parse("D8")
            .unwrap()
            .build(&Caps::default())
            .unwrap();
        let fg = GroupAlgebra::new(g, FiniteField::new(2, 1).unwrap()).unwrap();
        let rel = fg
            .relative_augmentation_ideal(&fg.group().derived_subgroup())
            .unwrap();
        let a = QuotientAlgebra::section(&fg, None, &rel).unwrap();
        assert_eq!(a.dim(), 4);
        let u = a.unit().unwrap().to_vec();
        for i in 0..4 {
            assert_eq!(a.mul(&u, &a.basis_element(i)), a.basis_element(i));
        }
        assert!(a.power_spaces().is_err());
    }
}
