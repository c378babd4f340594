use rayon::prelude::*;

use super::{IsoOutcome, IsoWitness};
use crate::gfq::{matrix, FiniteField, Scalar, Subspace};
use crate::modalg::QuotientAlgebra;
use crate::{Error, Result};

/// The `idx`-th vector of `F^dim`, reading `idx` in base `q` with the
/// first coordinate most significant, so index order is lexicographic.
fn vector_at(q: u64, dim: usize, mut idx: u64) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; dim];
    for c in v.iter_mut().rev() {
        *c = Scalar((idx % q) as u8);
        idx /= q;
    }
    v
}

/// Dimensions of the left and right annihilators of `x`.
fn annihilator_dims(a: &QuotientAlgebra, x: &[Scalar]) -> (usize, usize) {
    let f = a.field();
    let mut left = Subspace::zero(a.dim());
    let mut right = Subspace::zero(a.dim());
    for j in 0..a.dim() {
        let e = a.basis_element(j);
        left.insert(f, &a.mul(x, &e)).expect("dimension");
        right.insert(f, &a.mul(&e, x)).expect("dimension");
    }
    (a.dim() - left.dim(), a.dim() - right.dim())
}

fn element_count(a: &QuotientAlgebra, cap: u64) -> Result<u64> {
    (a.field().size() as u64)
        .checked_pow(a.dim() as u32)
        .filter(|&n| n <= cap)
        .ok_or(Error::EnumerationCap {
            cap,
            what: "algebra isomorphism search",
        })
}

/// Monomials in the generators whose values form a basis of `a`, found by
/// extending on the right in breadth-first order.
fn word_basis(a: &QuotientAlgebra, gens: &[Vec<Scalar>]) -> Option<Vec<Vec<usize>>> {
    let f = a.field();
    let mut span = Subspace::zero(a.dim());
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut values: Vec<Vec<Scalar>> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if span.insert(f, g).ok()? {
            words.push(vec![k]);
            values.push(g.clone());
        }
    }
    let mut i = 0;
    while i < words.len() {
        for (k, g) in gens.iter().enumerate() {
            let v = a.mul(&values[i], g);
            if span.insert(f, &v).ok()? {
                let mut w = words[i].clone();
                w.push(k);
                words.push(w);
                values.push(v);
            }
        }
        i += 1;
    }
    (words.len() == a.dim()).then_some(words)
}

fn eval_monomial(a: &QuotientAlgebra, w: &[usize], vals: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut acc = vals[w[0]].clone();
    for &k in &w[1..] {
        acc = a.mul(&acc, &vals[k]);
    }
    acc
}

/// True when the linear map with matrix `phi` (row convention) is
/// multiplicative on all basis pairs of `a`.
fn is_multiplicative(a: &QuotientAlgebra, b: &QuotientAlgebra, phi: &[Vec<Scalar>]) -> bool {
    let f = a.field();
    (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| {
            let lhs = matrix::vec_mul(f, &a.product_of_basis(i, j), phi);
            lhs == b.mul(&phi[i], &phi[j])
        })
    })
}

/// Decides whether two nilpotent algebras over the same field are
/// isomorphic. Generators of `a` are the unit vectors at non-pivot columns
/// of `a²`; their images run over elements of `b` outside `b²` with matching
/// annihilator dimensions. Each assignment determines a linear map through a
/// basis of monomials, which is accepted when it is invertible and
/// multiplicative. Both `|b|` and the pruned search space are bounded by
/// `cap`.
pub fn nilpotent_algebra_iso(
    a: &QuotientAlgebra,
    b: &QuotientAlgebra,
    cap: u64,
) -> Result<IsoOutcome> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().to_string(),
            b.field().to_string(),
        ));
    }
    let f = a.field();
    let pa = a.power_spaces()?;
    let pb = b.power_spaces()?;
    let dims = |p: &[Subspace]| p.iter().map(Subspace::dim).collect::<Vec<_>>();
    if dims(&pa) != dims(&pb) {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let n = a.dim();
    if n == 0 {
        return Ok(IsoOutcome::Isomorphic(IsoWitness::Algebra {
            generators: vec![],
            images: vec![],
            matrix: vec![],
        }));
    }
    let a2 = &pa[1];
    let b2 = &pb[1];
    let gens: Vec<Vec<Scalar>> = (0..n)
        .filter(|c| !a2.pivots().contains(c))
        .map(|c| a.basis_element(c))
        .collect();
    let words = word_basis(a, &gens).ok_or(Error::NotNilpotent)?;
    let w_matrix: Vec<Vec<Scalar>> = words.iter().map(|w| eval_monomial(a, w, &gens)).collect();
    let w_inv = matrix::inverse(f, &w_matrix).expect("monomial basis is a basis");

    let total = element_count(b, cap)?;
    let q = f.size() as u64;
    let profiles: Vec<(usize, usize)> = gens.iter().map(|g| annihilator_dims(a, g)).collect();
    let outside: Vec<(Vec<Scalar>, (usize, usize))> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let v = vector_at(q, n, idx);
            if b2.contains(f, &v).expect("dimension") {
                return None;
            }
            let prof = annihilator_dims(b, &v);
            Some((v, prof))
        })
        .collect();
    let candidates: Vec<Vec<Vec<Scalar>>> = profiles
        .iter()
        .map(|p| {
            outside
                .iter()
                .filter(|(_, q)| q == p)
                .map(|(v, _)| v.clone())
                .collect()
        })
        .collect();
    let space = candidates
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .filter(|&s| s <= cap)
        .ok_or(Error::EnumerationCap {
            cap,
            what: "algebra isomorphism search",
        })?;
    if space == 0 {
        return Ok(IsoOutcome::NotIsomorphic);
    }

    let accept = |images: &[Vec<Scalar>]| -> Option<Vec<Vec<Scalar>>> {
        // Images must stay independent modulo b².
        let mut top = b2.clone();
        for y in images {
            if !top.insert(f, y).ok()? {
                return None;
            }
        }
        let v: Vec<Vec<Scalar>> = words.iter().map(|w| eval_monomial(b, w, images)).collect();
        matrix::inverse(f, &v)?;
        let phi = matrix::mat_mul(f, &w_inv, &v);
        is_multiplicative(a, b, &phi).then_some(phi)
    };

    let found = candidates[0].par_iter().find_map_first(|first| {
        let mut chosen = vec![first.clone()];
        search(&candidates, &mut chosen, &accept).map(|phi| (chosen, phi))
    });
    Ok(match found {
        Some((images, matrix)) => IsoOutcome::Isomorphic(IsoWitness::Algebra {
            generators: gens,
            images,
            matrix,
        }),
        None => IsoOutcome::NotIsomorphic,
    })
}

type Accept<'a> = dyn Fn(&[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> + Sync + 'a;

fn search(
    candidates: &[Vec<Vec<Scalar>>],
    chosen: &mut Vec<Vec<Scalar>>,
    accept: &Accept<'_>,
) -> Option<Vec<Vec<Scalar>>> {
    if chosen.len() == candidates.len() {
        return accept(chosen);
    }
    for y in &candidates[chosen.len()] {
        chosen.push(y.clone());
        if let Some(r) = search(candidates, chosen, accept) {
            return Some(r);
        }
        chosen.pop();
    }
    None
}

/// Re-checks an algebra witness: the matrix must be invertible, send each
/// generator to its stated image and be multiplicative on basis pairs.
/// Only the generators and images are trusted to define the map when
/// `matrix` is empty; then the map is rebuilt from monomials.
pub fn verify_algebra_witness(
    w: &IsoWitness,
    a: &QuotientAlgebra,
    b: &QuotientAlgebra,
) -> Result<bool> {
    let IsoWitness::Algebra {
        generators,
        images,
        matrix: phi,
    } = w
    else {
        return Err(Error::ShapeMismatch("expected an algebra witness".into()));
    };
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().to_string(),
            b.field().to_string(),
        ));
    }
    let f = a.field();
    if a.dim() != b.dim() || generators.len() != images.len() {
        return Ok(false);
    }
    if generators.iter().chain(images).any(|v| v.len() != a.dim()) {
        return Err(Error::ShapeMismatch(
            "witness vectors have the wrong length".into(),
        ));
    }
    let phi = if phi.is_empty() {
        match map_from_generators(a, b, generators, images) {
            Some(m) => m,
            None => return Ok(false),
        }
    } else {
        phi.clone()
    };
    if phi.len() != a.dim() || phi.iter().any(|r| r.len() != b.dim()) {
        return Err(Error::ShapeMismatch(
            "witness matrix has the wrong shape".into(),
        ));
    }
    Ok(matrix::inverse(f, &phi).is_some()
        && generators
            .iter()
            .zip(images)
            .all(|(g, y)| &matrix::vec_mul(f, g, &phi) == y)
        && is_multiplicative(a, b, &phi))
}

/// The linear map determined by sending `generators` to `images`, if the
/// generators' monomials span `a`.
pub(crate) fn map_from_generators(
    a: &QuotientAlgebra,
    b: &QuotientAlgebra,
    generators: &[Vec<Scalar>],
    images: &[Vec<Scalar>],
) -> Option<Vec<Vec<Scalar>>> {
    let f: &FiniteField = a.field();
    let words = word_basis(a, generators)?;
    let w: Vec<Vec<Scalar>> = words
        .iter()
        .map(|m| eval_monomial(a, m, generators))
        .collect();
    let v: Vec<Vec<Scalar>> = words.iter().map(|m| eval_monomial(b, m, images)).collect();
    Some(matrix::mat_mul(f, &matrix::inverse(f, &w)?, &v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::modalg::GroupAlgebra;
    use crate::Caps;

    /// `Δ/Δ³` together with the coordinates of `s − 1` for each generator `s`.
    fn top_section(spec: &str, field: FiniteField) -> (QuotientAlgebra, Vec<Vec<Scalar>>) {
        let g = FamilySpec::parse(spec)
            .unwrap()
            .build(&Caps::default())
            .unwrap();
        let gens = g.generators().to_vec();
        let fg = GroupAlgebra::new(g, field).unwrap();
        let pw = fg.augmentation_powers();
        let q = QuotientAlgebra::section(&fg, Some(&pw[0]), &pw[2]).unwrap();
        let coords = gens
            .iter()
            .map(|&s| q.coordinates_of(&fg.g_minus_one(s)).unwrap())
            .collect();
        (q, coords)
    }

    #[test]
    fn lambda_gamma_over_two_and_four() {
        let f2 = FiniteField::new(2, 1).unwrap();
        let (lambda, _) = top_section("D8", f2.clone());
        let (gamma, _) = top_section("Q8", f2);
        assert_eq!(
            nilpotent_algebra_iso(&gamma, &lambda, 1 << 20).unwrap(),
            IsoOutcome::NotIsomorphic
        );
        let found = nilpotent_algebra_iso(&lambda, &lambda, 1 << 20).unwrap();
        assert!(verify_algebra_witness(found.witness().unwrap(), &lambda, &lambda).unwrap());

        let f4 = FiniteField::new(2, 2).unwrap();
        let w = f4.generator();
        let (lambda, ab) = top_section("D8", f4.clone());
        let (gamma, xy) = top_section("Q8", f4.clone());
        let found = nilpotent_algebra_iso(&gamma, &lambda, 1 << 20).unwrap();
        assert!(verify_algebra_witness(found.witness().unwrap(), &gamma, &lambda).unwrap());

        // x ↦ a, y ↦ ωa + b.
        let mut y_image = ab[0].clone();
        f4.scale(&mut y_image, w);
        f4.axpy(&mut y_image, Scalar::ONE, &ab[1]);
        let stated = IsoWitness::Algebra {
            generators: xy.clone(),
            images: vec![ab[0].clone(), y_image],
            matrix: vec![],
        };
        assert!(verify_algebra_witness(&stated, &gamma, &lambda).unwrap());
        let naive = IsoWitness::Algebra {
            generators: xy,
            images: ab,
            matrix: vec![],
        };
        assert!(!verify_algebra_witness(&naive, &gamma, &lambda).unwrap());
    }
}
