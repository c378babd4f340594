use super::{FiniteGroup, Subgroup};

impl FiniteGroup {
    /// A cyclic normal subgroup with cyclic quotient, if one exists.
    ///
    /// For a p-group, `G/N` is cyclic iff `N·Frat(G)` has index at most `p`.
    pub fn is_metacyclic(&self) -> Option<Subgroup> {
        let n = self.order();
        let frat = self.prime().map(|_| self.frattini(&self.whole()));
        let mut done = vec![false; n];
        for g in 0..n {
            if done[g] {
                continue;
            }
            let c = self.subgroup_generated(&[g]);
            // Every generator of ⟨g⟩ gives the same subgroup.
            let ord = c.order();
            let mut x = g;
            for k in 1..=ord {
                if super::finite_group::gcd(k, ord) == 1 {
                    done[x] = true;
                }
                x = self.mul(x, g);
            }
            if !self.is_normal(&c) {
                continue;
            }
            let cyclic_quotient = match (&frat, self.prime()) {
                (Some(f), Some(p)) => self.join(&c, f).order() * p as usize >= n,
                _ => {
                    let q = self.quotient_unchecked(&c).group;
                    (0..q.order()).any(|y| q.element_order(y) == q.order())
                }
            };
            if cyclic_quotient {
                return Some(c);
            }
        }
        None
    }
}
