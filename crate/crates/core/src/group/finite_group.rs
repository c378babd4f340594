use super::{prime_of_power, Subgroup};
use crate::words::{spanning_tree, CosetTable, Presentation, Word};
use crate::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
    prime: Option<u32>,
    presentation: Option<Presentation>,
    words: Option<Vec<Word>>,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table with identity at
    /// index `0`, checking the group axioms. Associativity is checked
    /// exhaustively up to order 512 and on `10^5` pseudo-random triples
    /// beyond.
    pub fn from_table(n: usize, mul: Vec<u32>) -> Result<Self> {
        if n == 0 || mul.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "table of length {} for order {n}",
                mul.len()
            )));
        }
        if mul.iter().any(|&x| x as usize >= n) {
            return Err(Error::ShapeMismatch("table entry out of range".into()));
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| mul[a * n + b] == 0) {
                inv[a] = b as u32;
            }
        }
        let mut g = FiniteGroup {
            n,
            mul,
            inv,
            gens: Vec::new(),
            prime: prime_of_power(n),
            presentation: None,
            words: None,
        };
        g.verify_axioms()?;
        g.gens = g.greedy_generators((0..n).collect::<Vec<_>>().as_slice());
        Ok(g)
    }

    /// Internal constructor for tables that are correct by construction.
    pub(crate) fn from_parts(
        n: usize,
        mul: Vec<u32>,
        gens: Vec<usize>,
        prime: Option<u32>,
    ) -> Self {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&x| x == 0).unwrap() as u32;
        }
        let mut gens: Vec<usize> = gens.into_iter().filter(|&g| g != 0).collect();
        gens.dedup();
        FiniteGroup {
            n,
            mul,
            inv,
            gens,
            prime: prime_of_power(n).or(prime),
            presentation: None,
            words: None,
        }
    }

    pub(crate) fn from_coset_table(ct: &CosetTable, presentation: Presentation) -> Self {
        let n = ct.len();
        let (parent, order) = spanning_tree(ct);
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            mul[i * n] = i as u32;
        }
        let mut words = vec![Word::identity(); n];
        for &j in order.iter().skip(1) {
            let (par, letter) = parent[j];
            let col = letter.column();
            for i in 0..n {
                let left = mul[i * n + par] as usize;
                mul[i * n + j] = ct.act(left, col) as u32;
            }
            let mut w = words[par].clone();
            w.push(letter);
            words[j] = w;
        }
        let gens_all: Vec<usize> = (0..presentation.generators().len())
            .map(|g| ct.act(0, 2 * g))
            .collect();
        let mut g = FiniteGroup::from_parts(n, mul, Vec::new(), None);
        g.gens = gens_all;
        g.presentation = Some(presentation);
        g.words = Some(words);
        g
    }

    /// Checks identity, inverses, Latin-square rows and associativity.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.n;
        let bad = |m: &str| Err(Error::ShapeMismatch(m.to_string()));
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return bad("element 0 is not the identity");
            }
            if self.inv[a] as usize >= n || self.mul(self.inv[a] as usize, a) != 0 {
                return bad("missing inverse");
            }
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] {
                    return bad("row is not a permutation");
                }
                seen[c] = true;
            }
        }
        let check = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 512 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return bad("not associative");
                        }
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..100_000 {
                let (a, b, c) = (next(), next(), next());
                if !check(a, b, c) {
                    return bad("not associative");
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Distinguished generators. For presented groups these are the images
    /// of the presentation generators, in order.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Generators with the identity and repeats removed.
    pub(crate) fn nontrivial_generators(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &g in &self.gens {
            if g != 0 && !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }

    pub fn prime(&self) -> Option<u32> {
        self.prime
    }

    pub fn require_p_group(&self) -> Result<u32> {
        self.prime.ok_or(Error::NotPGroup(self.n))
    }

    pub(crate) fn set_prime(&mut self, p: Option<u32>) {
        if self.n == 1 {
            self.prime = p;
        }
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    /// Normal-form word of an element over the presentation generators.
    pub fn word_of(&self, x: usize) -> Option<&Word> {
        self.words.as_ref().map(|w| &w[x])
    }

    pub fn label(&self, x: usize) -> String {
        match (&self.words, &self.presentation) {
            (Some(w), Some(p)) => w[x].display(p.generators()),
            _ => format!("#{x}"),
        }
    }

    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.inv(g), self.mul(x, g))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Evaluates a word over the distinguished generators.
    pub fn eval(&self, w: &Word) -> usize {
        self.eval_with(w, &self.gens)
    }

    /// Evaluates a word with generator `i` replaced by `images[i]`.
    pub fn eval_with(&self, w: &Word, images: &[usize]) -> usize {
        w.letters().iter().fold(0, |acc, l| {
            let x = images[l.gen as usize];
            self.mul(acc, if l.inverse { self.inv(x) } else { x })
        })
    }

    pub fn exponent(&self) -> usize {
        let mut e = 1usize;
        for a in 0..self.n {
            let o = self.element_order(a);
            e = e / gcd(e, o) * o;
        }
        e
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gens;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    // ---- subgroup construction ----

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(self.n, vec![0], Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts(self.n, (0..self.n).collect(), self.nontrivial_generators())
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_generated(&self, seed: &[usize]) -> Subgroup {
        self.extend(&self.trivial_subgroup(), seed)
    }

    /// Smallest subgroup containing `h` and `extra`.
    pub fn extend(&self, h: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut mask = h.mask().to_vec();
        let mut elems = h.elements().to_vec();
        let mut gens = h.generators().to_vec();
        for &x in extra {
            if mask[x] {
                continue;
            }
            gens.push(x);
            // Old elements only need multiplying by the new generator; new
            // elements by every generator.
            let old = elems.len();
            let mut i = 0;
            while i < elems.len() {
                let e = elems[i];
                let start = if i < old { gens.len() - 1 } else { 0 };
                for &g in &gens[start..] {
                    let y = self.mul(e, g);
                    if !mask[y] {
                        mask[y] = true;
                        elems.push(y);
                    }
                }
                i += 1;
            }
        }
        Subgroup::from_parts(self.n, elems, gens)
    }

    /// Subgroup generated by `h` and `k`.
    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        if h.order() >= k.order() {
            self.extend(h, k.generators())
        } else {
            self.extend(k, h.generators())
        }
    }

    pub fn intersection(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = h
            .elements()
            .iter()
            .copied()
            .filter(|&x| k.contains(x))
            .collect();
        let gens = self.greedy_generators(&elems);
        Subgroup::from_parts(self.n, elems, gens)
    }

    /// Wraps an element set that is claimed to be a subgroup, verifying
    /// closure.
    pub fn subgroup_from_elements(&self, elems: &[usize]) -> Result<Subgroup> {
        let s = self.subgroup_generated(elems);
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if s.elements() != sorted.as_slice() {
            return Err(Error::NotSubgroup);
        }
        Ok(s)
    }

    /// Generating set picked greedily from `elems` in order.
    pub(crate) fn greedy_generators(&self, elems: &[usize]) -> Vec<usize> {
        self.subgroup_generated(elems).generators().to_vec()
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.gens
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn normalizes(&self, k: &Subgroup, h: &Subgroup) -> bool {
        k.generators()
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    /// Normal closure of `seed` in the subgroup generated by `within`.
    pub fn normal_closure_in(&self, within: &[usize], seed: &[usize]) -> Subgroup {
        let mut h = self.subgroup_generated(seed);
        let mut i = 0;
        while i < h.generators().len() {
            let x = h.generators()[i];
            for &g in within {
                let y = self.conj(x, g);
                if !h.contains(y) {
                    h = self.extend(&h, &[y]);
                }
            }
            i += 1;
        }
        h
    }

    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        self.normal_closure_in(&self.gens.clone(), seed)
    }

    /// `[H, K]` for subgroups normalised by the whole group.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut seed = Vec::new();
        for &a in h.generators() {
            for &b in k.generators() {
                seed.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&seed)
    }

    pub fn center(&self) -> Subgroup {
        let elems: Vec<usize> = (0..self.n)
            .filter(|&x| self.gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        let gens = self.greedy_generators(&elems);
        Subgroup::from_parts(self.n, elems, gens)
    }

    pub fn centralizer(&self, x: usize) -> Subgroup {
        let elems: Vec<usize> = (0..self.n)
            .filter(|&y| self.mul(x, y) == self.mul(y, x))
            .collect();
        let gens = self.greedy_generators(&elems);
        Subgroup::from_parts(self.n, elems, gens)
    }

    /// `g^-1 H g` as a sorted element list.
    pub fn conjugate_elements(&self, h: &Subgroup, g: usize) -> Vec<usize> {
        let mut v: Vec<usize> = h.elements().iter().map(|&x| self.conj(x, g)).collect();
        v.sort_unstable();
        v
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
