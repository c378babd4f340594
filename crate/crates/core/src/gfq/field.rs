use std::fmt;

use crate::{Error, Result};

/// An element of a [`FiniteField`], stored as the base-`p` integer encoding
/// of its coefficient vector (constant term first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct Scalar(pub u8);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `F_{p^k}` realised as `F_p[x]/(m(x))` with `m` the smallest monic
/// irreducible of degree `k` (ordering polynomials by their base-`p`
/// encoding, leading coefficient most significant). For `k = 1` the modulus
/// is `x`. All arithmetic goes through precomputed `q × q` tables.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// Builds `F_{p^k}` with the default size cap `q ≤ 81`.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        Self::with_cap(p, k, 81)
    }

    pub fn with_cap(p: u32, k: u32, cap: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if !(1..=4).contains(&k) {
            return Err(Error::InvalidDegree(k));
        }
        let q = (p as u64).pow(k);
        if q > cap || q > 256 {
            return Err(Error::FieldCap {
                q,
                cap: cap.min(256),
            });
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k as usize)
        };
        let q = q as usize;
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            add: vec![0; q * q],
            mul: vec![0; q * q],
            neg: vec![0; q],
            inv: vec![0; q],
        };
        field.build_tables();
        Ok(field)
    }

    /// Parses a field literal of the form `p` or `p^k`.
    pub fn parse(text: &str, cap: u64) -> Result<Self> {
        let text = text.trim();
        let (p, k) = match text.split_once('^') {
            Some((p, k)) => (p.trim(), k.trim()),
            None => (text, "1"),
        };
        let p: u32 = p
            .parse()
            .map_err(|_| Error::parse(0, format!("bad field characteristic `{p}`")))?;
        let k: u32 = k
            .parse()
            .map_err(|_| Error::parse(0, format!("bad field degree `{k}`")))?;
        Self::with_cap(p, k, cap)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        for a in 0..q {
            let ca = self.coeffs_raw(a);
            for b in 0..q {
                let cb = self.coeffs_raw(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
                self.add[a * q + b] = self.encode(&sum) as u8;
                let prod = self.mul_poly_mod(&ca, &cb);
                self.mul[a * q + b] = self.encode(&prod) as u8;
            }
        }
        for a in 0..q {
            self.neg[a] = (0..q).find(|&b| self.add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                self.inv[a] = (0..q).find(|&b| self.mul[a * q + b] == 1).unwrap() as u8;
            }
        }
    }

    fn coeffs_raw(&self, mut a: usize) -> Vec<u32> {
        let mut out = vec![0; self.k as usize];
        for c in out.iter_mut() {
            *c = (a % self.p as usize) as u32;
            a /= self.p as usize;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> usize {
        coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    fn mul_poly_mod(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut prod = vec![0u32; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        poly_rem(&mut prod, &self.modulus, p);
        prod.truncate(self.k as usize);
        prod.resize(self.k as usize, 0);
        prod
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> usize {
        self.q
    }

    /// Modulus coefficients, constant term first, monic of length `k + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.q as u16).map(|i| Scalar(i as u8))
    }

    /// Smallest element (by encoding) generating the multiplicative group.
    /// For `F_4` this is the class `w` of `x`, with `w^2 + w + 1 = 0`.
    pub fn generator(&self) -> Scalar {
        let n = self.q as u64 - 1;
        self.elements()
            .skip(1)
            .find(|&g| (1..n).all(|e| self.pow(g, e) != Scalar::ONE))
            .unwrap_or(Scalar::ONE)
    }

    pub fn coeffs(&self, a: Scalar) -> Vec<u32> {
        self.coeffs_raw(a.0 as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Scalar> {
        if coeffs.len() != self.k as usize {
            return Err(Error::DimensionMismatch {
                expected: self.k as usize,
                found: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::parse(0, "coefficient out of range"));
        }
        Ok(Scalar(self.encode(coeffs) as u8))
    }

    /// Image of an integer under `Z → F_p ⊆ F`.
    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar(n.rem_euclid(self.p as i64) as u8)
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(self.add[a.0 as usize * self.q + b.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(self.mul[a.0 as usize * self.q + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        Scalar(self.neg[a.0 as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Scalar) -> Option<Scalar> {
        (!a.is_zero()).then(|| Scalar(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = Scalar::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `y += a * x` elementwise.
    #[inline]
    pub fn axpy(&self, y: &mut [Scalar], a: Scalar, x: &[Scalar]) {
        debug_assert_eq!(y.len(), x.len());
        if a.is_zero() {
            return;
        }
        if self.q == 2 {
            for (yi, xi) in y.iter_mut().zip(x) {
                yi.0 ^= xi.0;
            }
            return;
        }
        let q = self.q;
        let mrow = &self.mul[a.0 as usize * q..(a.0 as usize + 1) * q];
        for (yi, xi) in y.iter_mut().zip(x) {
            if xi.0 != 0 {
                yi.0 = self.add[yi.0 as usize * q + mrow[xi.0 as usize] as usize];
            }
        }
    }

    /// `v *= a` elementwise.
    pub fn scale(&self, v: &mut [Scalar], a: Scalar) {
        for x in v.iter_mut() {
            *x = self.mul(*x, a);
        }
    }

    pub fn dot(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        a.iter()
            .zip(b)
            .fold(Scalar::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Formats a scalar as a polynomial in `w` (the class of `x`).
    pub fn format(&self, a: Scalar) -> String {
        if self.k == 1 {
            return a.0.to_string();
        }
        let c = self.coeffs(a);
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            terms.push(match (ci, i) {
                (_, 0) => ci.to_string(),
                (1, _) => mono,
                _ => format!("{ci}{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// Reduces `a` modulo the monic polynomial `m` in place.
fn poly_rem(a: &mut Vec<u32>, m: &[u32], p: u32) {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let base = a.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                a[base + i] = (a[base + i] + (p - lead) * mi) % p;
            }
        }
    }
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = low;
            for _ in 0..d {
                g.push((x % p as usize) as u32);
                x /= p as usize;
            }
            g.push(1);
            let mut r = f.to_vec();
            poly_rem(&mut r, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = (p as usize).pow(k as u32);
    for low in 0..count {
        let mut f = Vec::with_capacity(k + 1);
        let mut x = low;
        for _ in 0..k {
            f.push((x % p as usize) as u32);
            x /= p as usize;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: [(u32, u32); 10] = [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 1),
        (3, 2),
        (3, 3),
        (3, 4),
        (5, 1),
        (5, 2),
    ];

    #[test]
    fn f4_modulus_and_omega() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let w = f.generator();
        // w^2 = w + 1, so w^2 + w + 1 = 0
        assert_eq!(f.mul(w, w), f.add(w, Scalar::ONE));
        let s = f.add(f.add(f.mul(w, w), w), Scalar::ONE);
        assert!(s.is_zero());
    }

    #[test]
    fn f3_arithmetic() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(f.add(Scalar(2), Scalar(2)), Scalar(1));
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn f8_modulus() {
        let f = FiniteField::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert_eq!(f.elements().count(), 8);
    }

    #[test]
    fn degree_three_scan_oracle() {
        // Brute-force: a cubic over F_2 is irreducible iff it has no root.
        let irreducible: Vec<u32> = (0..8u32)
            .filter(|low| {
                let c = [low & 1, (low >> 1) & 1, (low >> 2) & 1];
                (0..2).all(|x| (c[0] + c[1] * x + c[2] * x * x + x * x * x) % 2 != 0)
            })
            .collect();
        assert_eq!(irreducible, vec![3, 5]);
        // smallest by encoding 8 + low: x^3 + x + 1
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
    }

    #[test]
    fn errors() {
        assert_eq!(FiniteField::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(FiniteField::new(2, 0), Err(Error::InvalidDegree(0)));
        assert!(matches!(
            FiniteField::new(5, 3),
            Err(Error::FieldCap { .. })
        ));
        assert!(FiniteField::with_cap(5, 3, 200).is_ok());
    }

    #[test]
    fn parse_literals() {
        assert_eq!(FiniteField::parse("2^2", 81).unwrap().size(), 4);
        assert_eq!(FiniteField::parse("3", 81).unwrap().size(), 3);
        assert!(FiniteField::parse("x", 81).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &(p, k) in &SMALL {
            let f = FiniteField::new(p, k).unwrap();
            let els: Vec<Scalar> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, Scalar::ZERO), a);
                assert_eq!(f.mul(a, Scalar::ONE), a);
                assert!(f.add(a, f.neg(a)).is_zero());
                if let Some(ai) = f.inv(a) {
                    assert_eq!(f.mul(a, ai), Scalar::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_additive_and_bijective() {
        for &(p, k) in &SMALL {
            let f = FiniteField::new(p, k).unwrap();
            let mut image = std::collections::HashSet::new();
            for a in f.elements() {
                image.insert(f.pow(a, p as u64));
                for b in f.elements() {
                    assert_eq!(
                        f.pow(f.add(a, b), p as u64),
                        f.add(f.pow(a, p as u64), f.pow(b, p as u64))
                    );
                }
            }
            assert_eq!(image.len(), f.size());
        }
    }

    #[test]
    fn generator_is_primitive_for_small_fields() {
        for &(p, k) in &[(2, 2), (3, 2), (2, 3), (3, 1), (5, 1)] {
            let f = FiniteField::new(p, k).unwrap();
            let g = f.generator();
            let order = (1..f.size() as u64)
                .find(|&e| f.pow(g, e) == Scalar::ONE)
                .unwrap();
            assert_eq!(order, f.size() as u64 - 1, "{f}");
        }
    }
}
