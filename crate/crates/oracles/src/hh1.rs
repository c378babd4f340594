//! `dim HH¹(FG)` as outer derivations, from the presentation.
//!
//! A derivation of `FG` is fixed by its values `D(s)` on the presentation
//! generators, and any choice extends to the free group algebra by the
//! Leibniz rule with `D(s⁻¹) = −s⁻¹ D(s) s⁻¹`. It descends to `FG` exactly
//! when `D(r) = 0` for every relator `r`. Inner derivations form a space of
//! dimension `|G| − dim Z(FG) = |G| − #classes`.

use mip_core::gfq::{FiniteField, Scalar};
use mip_core::group::FiniteGroup;

use crate::group::conjugacy_classes;
use crate::linalg::rank;

/// Dimension of the space of all derivations `FG → FG`.
pub fn derivation_dimension(g: &FiniteGroup, f: &FiniteField) -> usize {
    let pres = g.presentation().expect("group built from a presentation");
    let n = g.order();
    let gens = g.generators();
    let d = pres.generators().len();
    let relators = pres.relators();
    let rows = relators.len() * n;
    // One column per unknown coefficient: the coefficient of h in D(s_i).
    let columns = (0..d)
        .flat_map(|i| (0..n).map(move |h| (i, h)))
        .map(|(i, h)| {
            let mut col = vec![Scalar::ZERO; rows];
            for (r, w) in relators.iter().enumerate() {
                let letters = w.letters();
                let mut prefix = 0usize;
                for (t, l) in letters.iter().enumerate() {
                    let s = gens[l.gen as usize];
                    let suffix = letters[t + 1..].iter().fold(0usize, |acc, m| {
                        let x = gens[m.gen as usize];
                        g.mul(acc, if m.inverse { g.inv(x) } else { x })
                    });
                    if l.gen as usize == i {
                        let (y, sign) = if l.inverse {
                            let si = g.inv(s);
                            (g.mul(g.mul(g.mul(g.mul(prefix, si), h), si), suffix), true)
                        } else {
                            (g.mul(g.mul(prefix, h), suffix), false)
                        };
                        let slot = &mut col[r * n + y];
                        *slot = if sign {
                            f.sub(*slot, Scalar::ONE)
                        } else {
                            f.add(*slot, Scalar::ONE)
                        };
                    }
                    prefix = g.mul(prefix, if l.inverse { g.inv(s) } else { s });
                }
            }
            col
        });
    d * n - rank(f, rows, columns)
}

/// `dim HH¹(FG) = dim Der(FG) − (|G| − #classes)`.
pub fn hh1_dimension(g: &FiniteGroup, f: &FiniteField) -> usize {
    derivation_dimension(g, f) - (g.order() - conjugacy_classes(g).len())
}
