//! Dense square matrices over a [`FiniteField`], acting on row vectors.

use super::{FiniteField, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            let mut r = vec![Scalar::ZERO; n];
            r[i] = Scalar::ONE;
            r
        })
        .collect()
}

/// Row vector times matrix: `v · M`.
pub fn vec_mul(field: &FiniteField, v: &[Scalar], m: &[Vec<Scalar>]) -> Vec<Scalar> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = vec![Scalar::ZERO; cols];
    for (&c, row) in v.iter().zip(m) {
        field.axpy(&mut out, c, row);
    }
    out
}

pub fn mat_mul(field: &FiniteField, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    a.iter().map(|r| vec_mul(field, r, b)).collect()
}

/// Inverse by Gauss–Jordan elimination, or `None` if singular.
pub fn inverse(field: &FiniteField, m: &[Vec<Scalar>]) -> Option<Matrix> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            debug_assert_eq!(r.len(), n);
            let mut row = r.clone();
            row.resize(2 * n, Scalar::ZERO);
            row[n + i] = Scalar::ONE;
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = field.inv(a[col][col])?;
        field.scale(&mut a[col], inv);
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let c = field.neg(row[col]);
                field.axpy(row, c, &pivot_row);
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
