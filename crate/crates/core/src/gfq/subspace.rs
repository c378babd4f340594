use super::{FiniteField, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersection,
}

/// A subspace of `F^n` held as a reduced row-echelon basis.
///
/// Rows are sorted by pivot column, each row has a `1` at its pivot and every
/// other row is zero in that column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![Scalar::ZERO; ambient];
                r[i] = Scalar::ONE;
                r
            })
            .collect();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Reduced row-echelon basis of the span of `vectors`.
    pub fn echelon_basis<V: AsRef<[Scalar]>>(
        field: &FiniteField,
        ambient: usize,
        vectors: impl IntoIterator<Item = V>,
    ) -> Result<Self> {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(field, v.as_ref())?;
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Reduces `v` in place by every pivot row.
    pub fn reduce(&self, field: &FiniteField, v: &mut [Scalar]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if !c.is_zero() {
                field.axpy(&mut v[piv..], field.neg(c), &row[piv..]);
            }
        }
    }

    pub fn contains(&self, field: &FiniteField, v: &[Scalar]) -> Result<bool> {
        Ok(self.residue(field, v)?.is_none())
    }

    /// `None` if `v` lies in the span; otherwise the sifted residue of `v`,
    /// scaled to have leading coefficient one.
    pub fn residue(&self, field: &FiniteField, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        self.reduce(field, &mut r);
        Ok(match r.iter().position(|x| !x.is_zero()) {
            None => None,
            Some(lead) => {
                let inv = field.inv(r[lead]).unwrap();
                field.scale(&mut r[lead..], inv);
                Some(r)
            }
        })
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, field: &FiniteField, v: &[Scalar]) -> Result<bool> {
        let Some(r) = self.residue(field, v)? else {
            return Ok(false);
        };
        self.push_residue(field, r);
        Ok(true)
    }

    fn push_residue(&mut self, field: &FiniteField, r: Vec<Scalar>) {
        let lead = r.iter().position(|x| !x.is_zero()).unwrap();
        for row in self.rows.iter_mut() {
            let c = row[lead];
            if !c.is_zero() {
                field.axpy(&mut row[lead..], field.neg(c), &r[lead..]);
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, r);
    }

    /// Coefficients of `v` with respect to [`rows`](Self::rows), or `None`
    /// when `v` is not in the span.
    pub fn coordinates(&self, field: &FiniteField, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_len(v)?;
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        self.reduce(field, &mut r);
        Ok(r.iter().all(|x| x.is_zero()).then_some(coords))
    }

    pub fn is_subspace_of(&self, field: &FiniteField, other: &Subspace) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(field, row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn combine(
        &self,
        field: &FiniteField,
        other: &Subspace,
        mode: CombineMode,
    ) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        match mode {
            CombineMode::Sum => {
                let mut s = self.clone();
                for row in &other.rows {
                    s.insert(field, row)?;
                }
                Ok(s)
            }
            CombineMode::Intersection => self.intersection(field, other),
        }
    }

    pub fn sum(&self, field: &FiniteField, other: &Subspace) -> Result<Self> {
        self.combine(field, other, CombineMode::Sum)
    }

    /// Intersection via the left kernel of the stacked bases: rows of `A`
    /// and `B` are tagged with unit vectors, the stack is echelonised on the
    /// vector part, and every row whose vector part vanishes yields a
    /// relation `αA = -βB`; the vectors `αA` span `A ∩ B`.
    fn intersection(&self, field: &FiniteField, other: &Subspace) -> Result<Self> {
        let n = self.ambient;
        let a = self.dim();
        let tags = a + other.dim();
        let mut work = Subspace::zero(n + tags);
        let mut kernel = Vec::new();
        for (i, row) in self.rows.iter().chain(&other.rows).enumerate() {
            let mut v = row.clone();
            v.resize(n + tags, Scalar::ZERO);
            v[n + i] = Scalar::ONE;
            work.reduce(field, &mut v);
            if v[..n].iter().all(|x| x.is_zero()) {
                kernel.push(v[n..].to_vec());
            } else {
                work.insert(field, &v)?;
            }
        }
        let mut out = Subspace::zero(n);
        for tag in kernel {
            let mut w = vec![Scalar::ZERO; n];
            for (row, &c) in self.rows.iter().zip(&tag[..a]) {
                field.axpy(&mut w, c, row);
            }
            out.insert(field, &w)?;
        }
        Ok(out)
    }
}
