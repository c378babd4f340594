use super::{FiniteGroup, Subgroup};

/// A conjugacy class, represented by its least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub rep: usize,
    /// Sorted element indices.
    pub elems: Vec<usize>,
    pub length: usize,
}

impl FiniteGroup {
    /// Conjugacy classes ordered by least representative. Orbits are grown
    /// by conjugating with the distinguished generators.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let n = self.order();
        let gens = self.nontrivial_generators();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                i += 1;
                for &g in &gens {
                    let z = self.conj(y, g);
                    if !seen[z] {
                        seen[z] = true;
                        orbit.push(z);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(ConjClass {
                rep: x,
                length: orbit.len(),
                elems: orbit,
            });
        }
        classes
    }

    /// Classes paired with the centraliser of their representative.
    pub fn classes_with_centralizers(&self) -> Vec<(ConjClass, Subgroup)> {
        self.conjugacy_classes()
            .into_iter()
            .map(|c| {
                let cent = self.centralizer(c.rep);
                (c, cent)
            })
            .collect()
    }

    /// `class_index[g]` = position of the class of `g` in
    /// [`conjugacy_classes`](Self::conjugacy_classes).
    pub fn class_index(&self, classes: &[ConjClass]) -> Vec<usize> {
        let mut idx = vec![0; self.order()];
        for (i, c) in classes.iter().enumerate() {
            for &e in &c.elems {
                idx[e] = i;
            }
        }
        idx
    }
}

#[cfg(test)]
mod tests {
    use crate::words::{todd_coxeter, Presentation};

    #[test]
    fn dihedral_classes() {
        let p = Presentation::parse(&["r", "s"], &["r^4", "s^2", "(s*r)^2"]).unwrap();
        let g = todd_coxeter(&p, 100).unwrap();
        let cl = g.classes_with_centralizers();
        assert_eq!(cl.len(), 5);
        assert_eq!(cl.iter().map(|(c, _)| c.length).sum::<usize>(), 8);
        for (c, cent) in &cl {
            assert_eq!(c.length * cent.order(), 8);
            assert_eq!(c.rep, c.elems[0]);
        }
    }

    #[test]
    fn cyclic_nine_singletons() {
        let p = Presentation::parse(&["a"], &["a^9"]).unwrap();
        let g = todd_coxeter(&p, 100).unwrap();
        let cl = g.conjugacy_classes();
        assert_eq!(cl.len(), 9);
        assert!(cl.iter().all(|c| c.length == 1));
    }
}
