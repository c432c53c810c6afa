use std::collections::{BTreeMap, BTreeSet};

use super::{CircuitMatroid, MatroidKind, MAX_GROUND};
use crate::bias::BiasedGraph;
use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, enumerate_thetas, Cycle, EdgeId, Multigraph, VertexId};

/// Hard cap on candidate circuits.
pub const DEFAULT_CIRCUIT_CAP: usize = 2_000_000;

pub fn matroid_of(bg: &BiasedGraph, kind: MatroidKind) -> Result<CircuitMatroid> {
    match kind {
        MatroidKind::Lift => lift_matroid(bg),
        MatroidKind::Frame => frame_matroid(bg),
    }
}

/// Circuits: balanced cycles, pairs of unbalanced cycles meeting in at most
/// one vertex, and thetas with no balanced cycle.
pub fn lift_matroid(bg: &BiasedGraph) -> Result<CircuitMatroid> {
    build(bg, MatroidKind::Lift)
}

/// Circuits: balanced cycles, pairs of unbalanced cycles meeting in exactly
/// one vertex, disjoint pairs of unbalanced cycles together with a path
/// joining them, and thetas with no balanced cycle.
pub fn frame_matroid(bg: &BiasedGraph) -> Result<CircuitMatroid> {
    build(bg, MatroidKind::Frame)
}

struct Indexed {
    ground: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl Indexed {
    fn edge_mask(&self, edges: &[EdgeId]) -> u128 {
        edges.iter().fold(0, |m, e| {
            m | 1 << self.ground.binary_search(e).expect("edge in ground set")
        })
    }

    fn vertex_set(&self, g: &Multigraph, c: &Cycle) -> BTreeSet<usize> {
        c.vertices(g)
            .iter()
            .map(|v| self.vertices.binary_search(v).expect("vertex in graph"))
            .collect()
    }
}

fn build(bg: &BiasedGraph, kind: MatroidKind) -> Result<CircuitMatroid> {
    let g = bg.graph();
    let ground: Vec<EdgeId> = g.edge_ids().collect();
    if ground.len() > MAX_GROUND {
        return Err(Error::ResourceLimit {
            what: "ground set elements",
            limit: MAX_GROUND,
        });
    }
    let ix = Indexed {
        ground: ground.clone(),
        vertices: g.vertices().collect(),
    };
    let cap = DEFAULT_CIRCUIT_CAP;
    let mut masks: Vec<u128> = Vec::new();
    let push = |masks: &mut Vec<u128>, m: u128| -> Result<()> {
        if masks.len() >= cap {
            return Err(Error::ResourceLimit {
                what: "candidate circuits",
                limit: cap,
            });
        }
        masks.push(m);
        Ok(())
    };
    let cycles = enumerate_cycles(g, None)?;
    let mut unbalanced: Vec<(u128, BTreeSet<usize>)> = Vec::new();
    for c in &cycles {
        let m = ix.edge_mask(c.edges());
        if bg.is_balanced(c) {
            push(&mut masks, m)?;
        } else {
            unbalanced.push((m, ix.vertex_set(g, c)));
        }
    }
    let paths = match kind {
        MatroidKind::Frame => Some(PathFinder::new(g, &ix)),
        MatroidKind::Lift => None,
    };
    for (i, (ma, va)) in unbalanced.iter().enumerate() {
        for (mb, vb) in &unbalanced[i + 1..] {
            let shared = va.intersection(vb).count();
            if shared > 1 {
                continue;
            }
            match (&paths, shared) {
                (None, _) | (Some(_), 1) => push(&mut masks, ma | mb)?,
                (Some(pf), _) => {
                    for p in pf.connecting(va, vb, ma | mb) {
                        push(&mut masks, ma | mb | p)?;
                    }
                }
            }
        }
    }
    for theta in enumerate_thetas(g)? {
        if theta.cycles().iter().all(|c| !bg.is_balanced(c)) {
            push(&mut masks, ix.edge_mask(&theta.edge_set()))?;
        }
    }
    Ok(CircuitMatroid::from_masks(ground, masks))
}

/// Paths between two disjoint vertex sets, meeting each only at an end.
struct PathFinder {
    /// Per vertex index: non-loop edges as (edge bit, neighbour index).
    adj: Vec<Vec<(usize, usize)>>,
}

impl PathFinder {
    fn new(g: &Multigraph, ix: &Indexed) -> Self {
        let mut adj = vec![Vec::new(); ix.vertices.len()];
        let vpos: BTreeMap<VertexId, usize> = ix
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        for (k, (_, e)) in g.edges().enumerate() {
            if e.is_loop() {
                continue;
            }
            let (a, b) = (vpos[&e.tail], vpos[&e.head]);
            adj[a].push((k, b));
            adj[b].push((k, a));
        }
        PathFinder { adj }
    }

    fn connecting(&self, from: &BTreeSet<usize>, to: &BTreeSet<usize>, used: u128) -> Vec<u128> {
        let mut out = Vec::new();
        let mut visited = vec![false; self.adj.len()];
        for &v in from {
            visited[v] = true;
        }
        for &start in from {
            self.extend(start, 0, used, from, to, &mut visited, &mut out);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        at: usize,
        path: u128,
        used: u128,
        from: &BTreeSet<usize>,
        to: &BTreeSet<usize>,
        visited: &mut Vec<bool>,
        out: &mut Vec<u128>,
    ) {
        for &(bit, next) in &self.adj[at] {
            if used >> bit & 1 == 1 || path >> bit & 1 == 1 {
                continue;
            }
            if to.contains(&next) {
                out.push(path | 1 << bit);
                continue;
            }
            if visited[next] || from.contains(&next) {
                continue;
            }
            visited[next] = true;
            self.extend(next, path | 1 << bit, used, from, to, visited, out);
            visited[next] = false;
        }
    }
}
