use super::{Letter, Presentation, Word};
use crate::group::FiniteGroup;
use crate::{Error, Result};

const NONE: u32 = u32::MAX;

/// A complete coset table of the trivial subgroup, i.e. the right regular
/// action of the presented group on its elements. Coset `0` is the identity
/// and cosets are numbered in order of creation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    cols: usize,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.table.len() / self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn columns(&self) -> usize {
        self.cols
    }

    /// Image of coset `c` under the letter with column index `col`.
    pub fn act(&self, c: usize, col: usize) -> usize {
        self.table[c * self.cols + col] as usize
    }

    pub fn trace(&self, mut c: usize, w: &Word) -> usize {
        for l in w.letters() {
            c = self.act(c, l.column());
        }
        c
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    queue: Vec<u32>,
    cap: usize,
}

impl Enumerator {
    fn n(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32> {
        let d = self.n() as u32;
        if self.n() >= self.cap {
            return Err(Error::CosetCap(self.cap));
        }
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut k = c;
        while self.forward[k as usize] != root {
            let next = self.forward[k as usize];
            self.forward[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32) {
        let a = self.rep(k);
        let b = self.rep(l);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.forward[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mux = self.get(mu, x);
                if mux != NONE {
                    self.merge(nu, mux);
                } else {
                    let nux = self.get(nu, x ^ 1);
                    if nux != NONE {
                        self.merge(mu, nux);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, a: u32, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = a;
        let mut b = a;
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != a {
                    self.coincidence(f, a);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            } else {
                self.define(f, w[i])?;
            }
        }
    }
}

/// HLT coset enumeration of the trivial subgroup with immediate coincidence
/// processing. Relators are scanned in declaration order from each live
/// coset in creation order, after which the coset's row is completed.
pub fn enumerate_cosets(p: &Presentation, cap: usize) -> Result<CosetTable> {
    let ngens = p.generators().len();
    if ngens == 0 {
        return Err(Error::NoGenerators);
    }
    let cols = 2 * ngens;
    let rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| r.letters().iter().map(|l| l.column()).collect())
        .collect();
    let mut e = Enumerator {
        cols,
        table: vec![NONE; cols],
        forward: vec![0],
        queue: Vec::new(),
        cap: cap.max(1),
    };
    let mut a = 0u32;
    while (a as usize) < e.n() {
        if e.live(a) {
            for r in &rels {
                e.scan_and_fill(a, r)?;
                if !e.live(a) {
                    break;
                }
            }
            if e.live(a) {
                for x in 0..cols {
                    if e.get(a, x) == NONE {
                        e.define(a, x)?;
                    }
                }
            }
        }
        a += 1;
    }
    let mut renumber = vec![NONE; e.n()];
    let mut next = 0u32;
    for c in 0..e.n() as u32 {
        if e.live(c) {
            renumber[c as usize] = next;
            next += 1;
        }
    }
    let mut table = Vec::with_capacity(next as usize * cols);
    for c in 0..e.n() as u32 {
        if e.live(c) {
            for x in 0..cols {
                let d = e.get(c, x);
                debug_assert!(d != NONE);
                table.push(renumber[d as usize]);
            }
        }
    }
    Ok(CosetTable { cols, table })
}

/// Enumerates the group presented by `p` and returns it as a Cayley-table
/// group whose distinguished generators are the presentation generators.
pub fn todd_coxeter(p: &Presentation, cap: usize) -> Result<FiniteGroup> {
    let ct = enumerate_cosets(p, cap)?;
    Ok(FiniteGroup::from_coset_table(&ct, p.clone()))
}

/// Breadth-first spanning tree of a coset table: for every coset except `0`
/// the parent coset and the letter leading to it, plus the visiting order.
pub(crate) fn spanning_tree(ct: &CosetTable) -> (Vec<(usize, Letter)>, Vec<usize>) {
    let n = ct.len();
    let mut parent = vec![(usize::MAX, Letter::new(0, false)); n];
    let mut seen = vec![false; n];
    let mut order = vec![0usize];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        i += 1;
        for col in 0..ct.columns() {
            let d = ct.act(c, col);
            if !seen[d] {
                seen[d] = true;
                parent[d] = (c, Letter::new((col / 2) as u32, col % 2 == 1));
                order.push(d);
            }
        }
    }
    (parent, order)
}
