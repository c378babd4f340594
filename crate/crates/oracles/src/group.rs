//! Element-by-element group computations on the Cayley table.

use std::collections::BTreeSet;

use mip_core::group::FiniteGroup;

/// Powers `1, x, x², …` up to the order of `x`.
pub fn cyclic(g: &FiniteGroup, x: usize) -> Vec<usize> {
    let mut out = vec![0];
    let mut y = x;
    while y != 0 {
        out.push(y);
        y = g.mul(y, x);
    }
    out
}

pub fn element_order(g: &FiniteGroup, x: usize) -> usize {
    cyclic(g, x).len()
}

/// Largest element order.
pub fn exponent(g: &FiniteGroup) -> usize {
    (0..g.order()).map(|x| element_order(g, x)).max().unwrap()
}

/// The subgroup generated by `seed`, closed under multiplication.
pub fn closure(g: &FiniteGroup, seed: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([0]);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in seed {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Conjugacy classes found by conjugating with every element.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<BTreeSet<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        for &y in &class {
            seen[y] = true;
        }
        out.push(class);
    }
    out
}

/// Is there `x` with `⟨x⟩` normal and `G/⟨x⟩` cyclic? Normality is tested
/// against every element and the quotient by the order of cosets.
pub fn is_metacyclic(g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).any(|x| {
        let c = cyclic(g, x);
        let members: BTreeSet<usize> = c.iter().copied().collect();
        let normal = (0..n).all(|h| members.contains(&g.mul(g.mul(g.inv(h), x), h)));
        if !normal {
            return false;
        }
        let index = n / c.len();
        (0..n).any(|y| {
            let mut z = y;
            let mut k = 1;
            while !members.contains(&z) {
                z = g.mul(z, y);
                k += 1;
            }
            k == index
        })
    })
}

/// Rank of the largest elementary abelian direct factor of a `p`-group via
/// `rank Ω₁(Z(G)) − rank(Ω₁(Z(G)) ∩ Frat(G))`. `Frat(G)` is taken from the
/// library; everything else is recomputed here.
pub fn elem_abelian_direct_factor_rank(g: &FiniteGroup) -> u32 {
    let p = g.prime().expect("p-group") as usize;
    let n = g.order();
    let centre: Vec<usize> = (0..n)
        .filter(|&z| (0..n).all(|h| g.mul(z, h) == g.mul(h, z)))
        .collect();
    let omega: Vec<usize> = centre
        .iter()
        .copied()
        .filter(|&z| element_order(g, z) <= p)
        .collect();
    let frat = g.frattini(&g.whole());
    let meet = omega.iter().filter(|&&z| frat.contains(z)).count();
    log(omega.len(), p) - log(meet, p)
}

/// `log_p` of a power of `p`.
pub fn log(mut m: usize, p: usize) -> u32 {
    let mut k = 0;
    while m > 1 {
        assert_eq!(m % p, 0, "not a power of {p}");
        m /= p;
        k += 1;
    }
    k
}

/// Coefficients of `∏_{n ≥ 1} (1 + t^n + … + t^{n(p−1)})^{d_n}` from `t⁰`
/// up, where `d_n = ranks[n − 1]`.
pub fn jennings_series(p: usize, ranks: &[usize]) -> Vec<u64> {
    let mut poly = vec![1u64];
    for (idx, &d) in ranks.iter().enumerate() {
        let n = idx + 1;
        for _ in 0..d {
            let mut next = vec![0u64; poly.len() + n * (p - 1)];
            for (e, &c) in poly.iter().enumerate() {
                for j in 0..p {
                    next[e + j * n] += c;
                }
            }
            poly = next;
        }
    }
    poly
}

/// Elements commuting with `x`.
pub fn centralizer(g: &FiniteGroup, x: usize) -> Vec<usize> {
    (0..g.order())
        .filter(|&h| g.mul(x, h) == g.mul(h, x))
        .collect()
}

/// `log_p |H : Frat(H)|` for a subgroup given by its elements, with
/// `Frat(H)` generated by all `p`-th powers and commutators in `H`.
pub fn rank(g: &FiniteGroup, h: &[usize]) -> u32 {
    let p = g.prime().expect("p-group") as usize;
    let mut seed: Vec<usize> = h.iter().map(|&x| g.pow(x, p as i64)).collect();
    for &x in h {
        for &y in h {
            seed.push(g.commutator(x, y));
        }
    }
    seed.sort_unstable();
    seed.dedup();
    log(h.len() / closure(g, &seed).len(), p)
}

/// `Σ_{classes} log_p |C_G(g) : Frat(C_G(g))|`, from scratch.
pub fn hh1_by_classes(g: &FiniteGroup) -> usize {
    conjugacy_classes(g)
        .iter()
        .map(|c| rank(g, &centralizer(g, *c.iter().next().unwrap())) as usize)
        .sum()
}
