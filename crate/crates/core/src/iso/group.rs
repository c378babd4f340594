use rayon::prelude::*;

use super::{IsoOutcome, IsoWitness};
use crate::group::FiniteGroup;
use crate::words::{Letter, Word};
use crate::{Error, Result};

/// `(element order, class length)` for every element.
fn profile(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let classes = g.conjugacy_classes();
    let mut out = vec![(0, 0); g.order()];
    for c in &classes {
        for &x in &c.elems {
            out[x] = (g.element_order(x), c.length);
        }
    }
    out
}

/// Words over the generators in `subset` reaching every element, by
/// breadth-first search from the identity.
fn words_over(g: &FiniteGroup, subset: &[usize]) -> Vec<Option<Word>> {
    let gens = g.generators();
    let mut words: Vec<Option<Word>> = vec![None; g.order()];
    words[0] = Some(Word::identity());
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &k in subset {
            for inverse in [false, true] {
                let s = if inverse { g.inv(gens[k]) } else { gens[k] };
                let y = g.mul(x, s);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(Letter::new(k as u32, inverse));
                    words[y] = Some(w);
                    queue.push(y);
                }
            }
        }
    }
    words
}

/// Decides whether `g ≅ h` by searching images for a generating subset of
/// the presentation generators of `g`. Candidate images must match the
/// element order and class length of the source generator. An assignment
/// is accepted when every relator of `g` vanishes on the images and the
/// images generate `h`; with `|g| = |h|` the induced map is then an
/// isomorphism. Fails if the pruned search space exceeds `cap`.
pub fn group_isomorphic(g: &FiniteGroup, h: &FiniteGroup, cap: u64) -> Result<IsoOutcome> {
    let pres = g.presentation().ok_or(Error::NoPresentation)?;
    if g.order() != h.order() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let pg = profile(g);
    let ph = profile(h);
    let mut sg = pg.clone();
    let mut sh = ph.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(IsoOutcome::NotIsomorphic);
    }

    // Generating subset of the presentation generators, in order.
    let gens = g.generators();
    let mut subset = Vec::new();
    let mut sub = g.trivial_subgroup();
    for (k, &x) in gens.iter().enumerate() {
        if !sub.contains(x) {
            subset.push(k);
            sub = g.extend(&sub, &[x]);
        }
    }
    let words = words_over(g, &subset);
    let derived: Vec<Word> = gens.iter().map(|&x| words[x].clone().unwrap()).collect();

    let candidates: Vec<Vec<usize>> = subset
        .iter()
        .map(|&k| (0..h.order()).filter(|&y| ph[y] == pg[gens[k]]).collect())
        .collect();
    let space = candidates
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .filter(|&s| s <= cap)
        .ok_or(Error::EnumerationCap {
            cap,
            what: "group isomorphism search",
        })?;
    if space == 0 {
        return Ok(IsoOutcome::NotIsomorphic);
    }

    let accept = |chosen: &[usize]| -> Option<Vec<usize>> {
        let mut by_gen = vec![0usize; gens.len()];
        for (&k, &y) in subset.iter().zip(chosen) {
            by_gen[k] = y;
        }
        let images: Vec<usize> = derived.iter().map(|w| h.eval_with(w, &by_gen)).collect();
        if pres.relators().iter().all(|r| h.eval_with(r, &images) == 0)
            && h.subgroup_generated(&images).order() == h.order()
        {
            Some(images)
        } else {
            None
        }
    };

    let found = candidates[0].par_iter().find_map_first(|&first| {
        let mut chosen = vec![first];
        search(&candidates, &mut chosen, &accept)
    });
    Ok(match found {
        Some(images) => {
            let map = induced_map(g, h, &images)?;
            IsoOutcome::Isomorphic(IsoWitness::Group { images, map })
        }
        None => IsoOutcome::NotIsomorphic,
    })
}

fn search(
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    accept: &(dyn Fn(&[usize]) -> Option<Vec<usize>> + Sync),
) -> Option<Vec<usize>> {
    if chosen.len() == candidates.len() {
        return accept(chosen);
    }
    for &y in &candidates[chosen.len()] {
        chosen.push(y);
        if let Some(r) = search(candidates, chosen, accept) {
            return Some(r);
        }
        chosen.pop();
    }
    None
}

fn induced_map(g: &FiniteGroup, h: &FiniteGroup, images: &[usize]) -> Result<Vec<usize>> {
    (0..g.order())
        .map(|x| {
            g.word_of(x)
                .map(|w| h.eval_with(w, images))
                .ok_or(Error::NoPresentation)
        })
        .collect()
}

/// Re-checks a group witness from scratch: the map induced by the generator
/// images must be a bijective homomorphism.
pub fn verify_group_witness(w: &IsoWitness, g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    let IsoWitness::Group { images, .. } = w else {
        return Err(Error::ShapeMismatch("expected a group witness".into()));
    };
    if images.len() != g.generators().len() || images.iter().any(|&y| y >= h.order()) {
        return Err(Error::ShapeMismatch(
            "witness does not match the groups".into(),
        ));
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    let map = induced_map(g, h, images)?;
    let mut hit = vec![false; h.order()];
    for &y in &map {
        if hit[y] {
            return Ok(false);
        }
        hit[y] = true;
    }
    let n = g.order();
    Ok((0..n).all(|a| (0..n).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b]))))
}
