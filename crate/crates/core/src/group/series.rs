use super::{log_p, FiniteGroup, Subgroup};
use crate::{Error, Result};

/// Lower central series and the subgroups derived from it.
#[derive(Debug, Clone)]
pub struct CharSeries {
    /// `γ_1 = G, γ_2, …` up to and including the trivial term.
    pub lower_central: Vec<Subgroup>,
    pub derived: Subgroup,
    pub center: Subgroup,
    pub frattini: Subgroup,
    pub nilpotency_class: usize,
}

/// Which power-type subgroup [`FiniteGroup::agemo_omega`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerMode {
    /// `℧_k = ⟨g^{p^k}⟩`
    Agemo,
    /// `Ω_k = ⟨g : g^{p^k} = 1⟩`
    Omega,
    /// `Ω_k(G:N) = ⟨g : g^{p^k} ∈ N⟩`
    OmegaRel,
}

impl FiniteGroup {
    pub fn char_series(&self) -> Result<CharSeries> {
        if self.order() > 1 {
            self.require_p_group()?;
        }
        let lower_central = self.lower_central_series();
        let derived = lower_central
            .get(1)
            .cloned()
            .unwrap_or_else(|| self.trivial_subgroup());
        Ok(CharSeries {
            nilpotency_class: lower_central.len() - 1,
            derived,
            center: self.center(),
            frattini: self.frattini(&self.whole()),
            lower_central,
        })
    }

    /// `γ_{i+1} = [γ_i, G]`, computed as the normal closure of commutators of
    /// generators. Ends with the first trivial term (just `[1]` for the
    /// trivial group). Only terminates for nilpotent groups; for others it
    /// stops once the series stabilises.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let mut seed = Vec::new();
            for &x in last.generators() {
                for &g in self.generators() {
                    seed.push(self.commutator(x, g));
                }
            }
            let next = self.normal_closure(&seed);
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.commutator_subgroup(&g, &g)
    }

    pub fn nilpotency_class(&self) -> Result<usize> {
        let s = self.lower_central_series();
        if !s.last().unwrap().is_trivial() {
            return Err(Error::NotNilpotent);
        }
        Ok(s.len() - 1)
    }

    /// `Frat(H) = H^p [H, H]` for a p-subgroup `H`.
    pub fn frattini(&self, h: &Subgroup) -> Subgroup {
        let Some(p) = self.prime() else {
            return self.trivial_subgroup();
        };
        let gens = h.generators();
        let mut seed = Vec::new();
        for (i, &x) in gens.iter().enumerate() {
            seed.push(self.pow(x, p as i64));
            for &y in &gens[i + 1..] {
                seed.push(self.commutator(x, y));
            }
        }
        self.normal_closure_in(gens, &seed)
    }

    /// Rank of `H / Frat(H)`.
    pub fn min_generators(&self, h: &Subgroup) -> usize {
        match self.prime() {
            Some(p) => log_p(h.order() / self.frattini(h).order(), p) as usize,
            None => 0,
        }
    }

    /// `℧_k(H) = ⟨h^{p^k} : h ∈ H⟩`.
    pub fn agemo_of(&self, h: &Subgroup, k: u32) -> Subgroup {
        let pk = self.p_power(k);
        let mut out = self.trivial_subgroup();
        for &x in h.elements() {
            let y = self.pow(x, pk);
            if !out.contains(y) {
                out = self.extend(&out, &[y]);
            }
        }
        out
    }

    /// `Ω_k(H) = ⟨h ∈ H : h^{p^k} = 1⟩`.
    pub fn omega_of(&self, h: &Subgroup, k: u32) -> Subgroup {
        let pk = self.p_power(k);
        let seed: Vec<usize> = h
            .elements()
            .iter()
            .copied()
            .filter(|&x| self.pow(x, pk) == 0)
            .collect();
        self.subgroup_generated(&seed)
    }

    /// The power-type subgroups `℧_k(G)`, `Ω_k(G)` and `Ω_k(G:N)`. `n` is
    /// only consulted for [`PowerMode::OmegaRel`].
    pub fn agemo_omega(&self, n: &Subgroup, k: u32, mode: PowerMode) -> Result<Subgroup> {
        if n.parent_order() != self.order() {
            return Err(Error::NotSubgroup);
        }
        let whole = self.whole();
        Ok(match mode {
            PowerMode::Agemo => self.agemo_of(&whole, k),
            PowerMode::Omega => self.omega_of(&whole, k),
            PowerMode::OmegaRel => {
                if !self.is_normal(n) {
                    return Err(Error::NotNormal);
                }
                let pk = self.p_power(k);
                let seed: Vec<usize> = (0..self.order())
                    .filter(|&x| n.contains(self.pow(x, pk)))
                    .collect();
                self.subgroup_generated(&seed)
            }
        })
    }

    fn p_power(&self, k: u32) -> i64 {
        (self.prime().unwrap_or(1) as i64).pow(k)
    }

    /// `D_1, …, D_{n_max}` by Lazard's formula
    /// `D_n = ∏_{i p^j ≥ n} ℧_j(γ_i)`. For each `i` only the least admissible
    /// `j` matters since `℧_j(γ_i)` decreases with `j`, and `γ_i ⊆ γ_n` for
    /// `i ≥ n`.
    pub fn dimension_subgroups_lazard(&self, n_max: usize) -> Result<Vec<Subgroup>> {
        let p = if self.order() == 1 {
            self.prime().unwrap_or(2)
        } else {
            self.require_p_group()?
        } as usize;
        let gamma = self.lower_central_series();
        let mut out = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let mut d = self.trivial_subgroup();
            for (idx, g) in gamma.iter().enumerate().take(n) {
                let i = idx + 1;
                if g.is_trivial() {
                    break;
                }
                let mut j = 0u32;
                while i * p.pow(j) < n {
                    j += 1;
                }
                d = self.join(&d, &self.agemo_of(g, j));
            }
            out.push(d);
        }
        Ok(out)
    }

    /// The Jennings series `D_1 ⊇ D_2 ⊇ …` up to and including the first
    /// trivial term.
    pub fn jennings_series(&self) -> Result<Vec<Subgroup>> {
        let mut n_max = 2;
        loop {
            let d = self.dimension_subgroups_lazard(n_max)?;
            if d.last().unwrap().is_trivial() {
                let end = d.iter().position(|s| s.is_trivial()).unwrap();
                return Ok(d[..=end].to_vec());
            }
            n_max *= 2;
        }
    }
}
