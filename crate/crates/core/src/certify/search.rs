use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{apply_rerouting, ReroutingCertificate, ReroutingStep};
use crate::bias::BiasedGraph;
use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, ClosedWalk, Cycle, EdgeId};
use crate::grouplab::free_labelling;

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

struct Node {
    walk: ClosedWalk,
    depth: usize,
    parent: Option<(usize, ReroutingStep)>,
}

/// Breadth-first search for a shortest certificate, starting from every
/// unbalanced cycle at once. Walks longer than `max_walk_len` are not
/// explored and no certificate has more than `max_steps` steps. Defaults are
/// `2|E|` and `|B| + |E|`. `Ok(None)` means none exists within the bounds.
///
/// Rerouting along a balanced cycle changes the value of a walk only by
/// conjugation under any labelling in which balanced cycles have identity
/// value. Starting cycles whose value is not the identity under such a
/// labelling (see [`free_labelling`]) are skipped.
pub fn search_certificate(
    bg: &BiasedGraph,
    max_walk_len: Option<usize>,
    max_steps: Option<usize>,
) -> Result<Option<ReroutingCertificate>> {
    search_certificate_capped(bg, max_walk_len, max_steps, DEFAULT_STATE_CAP)
}

pub fn search_certificate_capped(
    bg: &BiasedGraph,
    max_walk_len: Option<usize>,
    max_steps: Option<usize>,
    state_cap: usize,
) -> Result<Option<ReroutingCertificate>> {
    let g = bg.graph();
    let max_walk_len = max_walk_len.unwrap_or(2 * g.edge_count());
    let max_steps = max_steps.unwrap_or(bg.balanced().len() + g.edge_count());
    let balanced: Vec<&Cycle> = bg.balanced().iter().collect();
    let mut through: BTreeMap<EdgeId, Vec<usize>> = BTreeMap::new();
    for (i, c) in balanced.iter().enumerate() {
        for &e in c.edges() {
            through.entry(e).or_default().push(i);
        }
    }
    if balanced.is_empty() {
        return Ok(None);
    }

    let mut nodes: Vec<Node> = Vec::new();
    let mut seen: HashMap<ClosedWalk, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let filter = free_labelling(bg)?;
    for c in enumerate_cycles(g, Some(max_walk_len))? {
        if bg.is_balanced(&c) {
            continue;
        }
        let walk = ClosedWalk::around(g, &c)?;
        if let Some(phi) = &filter {
            if !phi.walk_value(&walk)?.is_identity() {
                continue;
            }
        }
        let key = walk.canonical();
        if seen.contains_key(&key) {
            continue;
        }
        seen.insert(key, nodes.len());
        queue.push_back(nodes.len());
        nodes.push(Node {
            walk,
            depth: 0,
            parent: None,
        });
    }
    while let Some(id) = queue.pop_front() {
        if nodes[id].depth >= max_steps {
            continue;
        }
        let walk = nodes[id].walk.clone();
        let n = walk.len();
        for start in 0..n {
            let Some(cs) = through.get(&walk.steps()[start].edge) else {
                continue;
            };
            for &ci in cs {
                let cycle = balanced[ci];
                for len in 1..cycle.len().min(n + 1) {
                    if !cycle.contains(walk.steps()[(start + len - 1) % n].edge) {
                        break;
                    }
                    let step = ReroutingStep {
                        cycle: cycle.clone(),
                        start,
                        len,
                    };
                    let Ok(next) = apply_rerouting(g, &walk, &step) else {
                        continue;
                    };
                    if next.len() > max_walk_len {
                        continue;
                    }
                    let key = next.canonical();
                    if seen.contains_key(&key) {
                        continue;
                    }
                    if nodes.len() >= state_cap {
                        return Err(Error::ResourceLimit {
                            what: "certificate search states",
                            limit: state_cap,
                        });
                    }
                    let done = next.as_cycle(g).is_some_and(|c| bg.is_balanced(&c));
                    seen.insert(key, nodes.len());
                    let depth = nodes[id].depth + 1;
                    nodes.push(Node {
                        walk: next,
                        depth,
                        parent: Some((id, step)),
                    });
                    if done {
                        return Ok(Some(unwind(nodes)));
                    }
                    queue.push_back(nodes.len() - 1);
                }
            }
        }
    }
    Ok(None)
}

fn unwind(nodes: Vec<Node>) -> ReroutingCertificate {
    let mut walks = Vec::new();
    let mut steps = Vec::new();
    let mut at = nodes.len() - 1;
    loop {
        walks.push(nodes[at].walk.clone());
        match &nodes[at].parent {
            Some((p, step)) => {
                steps.push(step.clone());
                at = *p;
            }
            None => break,
        }
    }
    walks.reverse();
    steps.reverse();
    ReroutingCertificate { walks, steps }
}
