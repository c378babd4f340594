use mip_core::gfq::{FiniteField, Scalar};

/// A subspace of `F^n` held in fully reduced echelon form.
#[derive(Clone)]
pub struct Span<'f> {
    field: &'f FiniteField,
    ambient: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl<'f> Span<'f> {
    pub fn new(field: &'f FiniteField, ambient: usize) -> Self {
        Span {
            field,
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Scalar>>>(
        field: &'f FiniteField,
        ambient: usize,
        vs: I,
    ) -> Self {
        let mut s = Span::new(field, ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// `v` with every pivot coordinate cleared.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        for (p, row) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                f.axpy(&mut v, f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[p]).expect("nonzero pivot");
        f.scale(&mut v, inv);
        for (_, row) in &mut self.rows {
            let c = row[p];
            if !c.is_zero() {
                f.axpy(row, f.neg(c), &v);
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.basis().all(|r| other.contains(r))
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// Rank of a list of vectors.
pub fn rank(
    field: &FiniteField,
    ambient: usize,
    vs: impl IntoIterator<Item = Vec<Scalar>>,
) -> usize {
    Span::from_vectors(field, ambient, vs).dim()
}
