use std::collections::BTreeMap;

use super::{presentation, FreeWord, GroupLabelling, GroupPresentation, Letter};
use crate::bias::BiasedGraph;
use crate::error::Result;

/// Words longer than this abandon elimination.
const MAX_WORD_LEN: usize = 4096;

fn substitute(word: &FreeWord, values: &BTreeMap<u32, FreeWord>) -> FreeWord {
    let mut letters = Vec::new();
    for l in word.letters() {
        match values.get(&l.gen) {
            Some(w) if l.inverse => letters.extend(w.inverse().letters().iter().copied()),
            Some(w) => letters.extend(w.letters().iter().copied()),
            None => letters.push(*l),
        }
    }
    FreeWord::reduce(letters)
}

/// Removes relators one at a time, each time solving for a generator that
/// occurs exactly once in it. Returns the value of every generator in the
/// free group on the generators that remain, or `None` if some relator has
/// no such generator.
pub fn eliminate_relators(pres: &GroupPresentation) -> Option<BTreeMap<u32, FreeWord>> {
    let mut rels: Vec<FreeWord> = pres
        .relators
        .iter()
        .map(|(_, w)| w.cyclically_reduced())
        .collect();
    let mut solved: Vec<(u32, FreeWord)> = Vec::new();
    loop {
        rels.retain(|r| !r.is_identity());
        if rels.is_empty() {
            break;
        }
        let mut order: Vec<usize> = (0..rels.len()).collect();
        order.sort_by_key(|&i| (rels[i].len(), i));
        let pick = order.iter().find_map(|&i| {
            let r = rels[i].letters();
            let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
            for l in r {
                *counts.entry(l.gen).or_default() += 1;
            }
            let gen = counts.iter().find(|(_, &c)| c == 1).map(|(&g, _)| g)?;
            Some((i, r.iter().position(|l| l.gen == gen).expect("present")))
        })?;
        let (i, pos) = pick;
        let r = rels.swap_remove(i);
        let letters = r.letters();
        let x: Letter = letters[pos];
        // r = A x B, so x^e = (B A)^-1.
        let rest = FreeWord::reduce(letters[pos + 1..].iter().chain(&letters[..pos]).copied());
        let value = if x.inverse { rest } else { rest.inverse() };
        if value.len() > MAX_WORD_LEN {
            return None;
        }
        let one = BTreeMap::from([(x.gen, value.clone())]);
        for r in rels.iter_mut() {
            *r = substitute(r, &one).cyclically_reduced();
            if r.len() > MAX_WORD_LEN {
                return None;
            }
        }
        solved.push((x.gen, value));
    }
    let mut values: BTreeMap<u32, FreeWord> = BTreeMap::new();
    for (gen, expr) in solved.into_iter().rev() {
        let v = substitute(&expr, &values);
        values.insert(gen, v);
    }
    let n = pres.generators.len() as u32;
    Some(
        (0..n)
            .map(|k| {
                (
                    k,
                    values.remove(&k).unwrap_or_else(|| FreeWord::generator(k)),
                )
            })
            .collect(),
    )
}

/// A free-group labelling under which every balanced cycle has identity
/// value, from relator elimination on the presentation over a spanning
/// tree. `None` when elimination stalls.
pub fn free_labelling(bg: &BiasedGraph) -> Result<Option<GroupLabelling>> {
    let g = bg.graph();
    let tree = g.spanning_tree()?;
    let pres = presentation(bg, &tree)?;
    let Some(values) = eliminate_relators(&pres) else {
        return Ok(None);
    };
    let labels = g
        .edge_ids()
        .map(|e| {
            let w = pres
                .generator_of(e)
                .map(|k| values[&k].clone())
                .unwrap_or_default();
            (e, w)
        })
        .collect();
    Ok(Some(GroupLabelling::new(g.clone(), labels)?))
}
