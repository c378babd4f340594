//! The group algebra `FG` as plain coefficient vectors indexed by elements.

use mip_core::gfq::{FiniteField, Scalar};
use mip_core::group::FiniteGroup;

use crate::linalg::Span;

pub fn unit(g: &FiniteGroup, x: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; g.order()];
    v[x] = Scalar::ONE;
    v
}

/// `x − 1`.
pub fn minus_one(g: &FiniteGroup, f: &FiniteField, x: usize) -> Vec<Scalar> {
    let mut v = unit(g, x);
    v[0] = f.sub(v[0], Scalar::ONE);
    v
}

/// Convolution over every pair of group elements.
pub fn product(g: &FiniteGroup, f: &FiniteField, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = g.order();
    let mut out = vec![Scalar::ZERO; n];
    for (a, &xa) in x.iter().enumerate() {
        for (b, &yb) in y.iter().enumerate() {
            let t = g.mul(a, b);
            out[t] = f.add(out[t], f.mul(xa, yb));
        }
    }
    out
}

pub fn power(g: &FiniteGroup, f: &FiniteField, x: &[Scalar], e: u64) -> Vec<Scalar> {
    let mut acc = unit(g, 0);
    for _ in 0..e {
        acc = product(g, f, &acc, x);
    }
    acc
}

/// `Δ, Δ², …` ending with the first zero power, where
/// `Δ^{k+1} = span{u·(h − 1) : u ∈ Δ^k, h ∈ G}` runs over all of `G`.
pub fn delta_powers<'f>(g: &FiniteGroup, f: &'f FiniteField) -> Vec<Span<'f>> {
    let n = g.order();
    let mut out = vec![Span::from_vectors(f, n, (0..n).map(|x| minus_one(g, f, x)))];
    while out.last().unwrap().dim() > 0 {
        let prev = out.last().unwrap();
        let mut next = Span::new(f, n);
        for u in prev.basis() {
            for h in 1..n {
                // u·h − u
                let mut w = vec![Scalar::ZERO; n];
                for (a, &c) in u.iter().enumerate() {
                    let t = g.mul(a, h);
                    w[t] = f.add(w[t], c);
                }
                next.insert(w.iter().zip(u).map(|(&p, &q)| f.sub(p, q)).collect());
            }
        }
        out.push(next);
    }
    out
}

/// The `k`-th power from a list produced by [`delta_powers`], reading
/// indices past the end as zero.
pub fn nth<'a, 'f>(powers: &'a [Span<'f>], k: usize) -> &'a Span<'f> {
    powers.get(k - 1).unwrap_or_else(|| powers.last().unwrap())
}

/// `{x ∈ G : x − 1 ∈ Δ^k}` as a sorted element list.
pub fn dimension_subgroup(
    g: &FiniteGroup,
    f: &FiniteField,
    powers: &[Span],
    k: usize,
) -> Vec<usize> {
    let d = nth(powers, k);
    (0..g.order())
        .filter(|&x| d.contains(&minus_one(g, f, x)))
        .collect()
}

/// The ideal `Δ(N)FG` spanned by `(u − 1)·h` for every `u ∈ N`, `h ∈ G`.
pub fn relative_augmentation<'f>(
    g: &FiniteGroup,
    f: &'f FiniteField,
    normal: &[usize],
) -> Span<'f> {
    let n = g.order();
    let mut s = Span::new(f, n);
    for &u in normal {
        for h in 0..n {
            let mut v = unit(g, g.mul(u, h));
            v[h] = f.sub(v[h], Scalar::ONE);
            s.insert(v);
        }
    }
    s
}

/// Structure constants of the group algebra of `q` in the group basis.
pub fn group_ring_structure_constants(q: &FiniteGroup) -> Vec<Vec<Vec<Scalar>>> {
    let n = q.order();
    (0..n)
        .map(|a| (0..n).map(|b| unit(q, q.mul(a, b))).collect())
        .collect()
}

/// A basis of a complement of `lower` inside `upper`.
pub fn complement<'f>(upper: &Span<'f>, lower: &Span<'f>) -> Vec<Vec<Scalar>> {
    let mut acc = lower.clone();
    upper
        .basis()
        .filter(|r| acc.insert((*r).clone()))
        .cloned()
        .collect()
}

/// Every vector `Σ c_i b_i` over the field, the zero vector first.
pub fn all_combinations(
    f: &FiniteField,
    basis: &[Vec<Scalar>],
    ambient: usize,
) -> Vec<Vec<Scalar>> {
    let q = f.size();
    let total = q.pow(basis.len() as u32);
    let scalars: Vec<Scalar> = f.elements().collect();
    (0..total)
        .map(|mut idx| {
            let mut v = vec![Scalar::ZERO; ambient];
            for b in basis {
                f.axpy(&mut v, scalars[idx % q], b);
                idx /= q;
            }
            v
        })
        .collect()
}

/// Number of classes in `Δ^i/Δ^j` whose `p^k`-th power is not in `Δ^j`,
/// by squaring every representative in `FG` itself.
pub fn nonzero_powers(
    g: &FiniteGroup,
    f: &FiniteField,
    powers: &[Span],
    i: usize,
    j: usize,
    k: u32,
) -> u64 {
    let top = nth(powers, i);
    let bottom = nth(powers, j);
    let basis = complement(top, bottom);
    let e = (f.characteristic() as u64).pow(k);
    all_combinations(f, &basis, g.order())
        .iter()
        .filter(|x| !bottom.contains(&power(g, f, x, e)))
        .count() as u64
}
