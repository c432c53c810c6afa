use std::collections::{BTreeMap, BTreeSet};

use super::{orient_path, Cycle, EdgeId, Multigraph, Step, VertexId};
use crate::error::{Error, Result};

/// Default hard cap on the number of cycles or thetas an enumeration may emit.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// All cycles of length at most `max_len` (all cycles when `None`), sorted.
pub fn enumerate_cycles(graph: &Multigraph, max_len: Option<usize>) -> Result<Vec<Cycle>> {
    enumerate_cycles_capped(graph, max_len, DEFAULT_CYCLE_CAP)
}

/// As [`enumerate_cycles`], failing with a resource-limit error once more than
/// `cap` cycles have been found.
///
/// Every non-loop cycle is produced exactly once: from its smallest edge
/// `e0 = (u, v)`, a depth-first search extends a path from `v` back to `u`
/// through edges with larger ids only.
pub fn enumerate_cycles_capped(
    graph: &Multigraph,
    max_len: Option<usize>,
    cap: usize,
) -> Result<Vec<Cycle>> {
    let max_len = max_len.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if max_len == 0 {
        return Ok(out);
    }
    let inc = graph.incidence();
    let mut search = Search {
        inc: &inc,
        max_len,
        cap,
        out: &mut out,
        path: Vec::new(),
        on_path: BTreeSet::new(),
    };
    for (id, e) in graph.edges() {
        if e.is_loop() {
            search.emit(vec![id])?;
            continue;
        }
        search.path.clear();
        search.path.push(id);
        search.on_path.clear();
        search.on_path.insert(e.head);
        search.extend(id, e.head, e.tail)?;
    }
    out.sort();
    Ok(out)
}

struct Search<'a> {
    inc: &'a BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
    max_len: usize,
    cap: usize,
    out: &'a mut Vec<Cycle>,
    path: Vec<EdgeId>,
    on_path: BTreeSet<VertexId>,
}

impl Search<'_> {
    fn emit(&mut self, edges: Vec<EdgeId>) -> Result<()> {
        if self.out.len() >= self.cap {
            return Err(Error::ResourceLimit {
                what: "cycles",
                limit: self.cap,
            });
        }
        self.out.push(Cycle::from_edges_unchecked(edges));
        Ok(())
    }

    fn extend(&mut self, min_edge: EdgeId, at: VertexId, target: VertexId) -> Result<()> {
        if self.path.len() >= self.max_len {
            return Ok(());
        }
        for &(id, next) in &self.inc[&at] {
            if id <= min_edge || next == at {
                continue;
            }
            if next == target {
                let mut edges = self.path.clone();
                edges.push(id);
                self.emit(edges)?;
                continue;
            }
            if self.on_path.contains(&next) {
                continue;
            }
            self.path.push(id);
            self.on_path.insert(next);
            self.extend(min_edge, next, target)?;
            self.on_path.remove(&next);
            self.path.pop();
        }
        Ok(())
    }
}

/// Two distinct vertices joined by three internally disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Theta {
    /// The two branch vertices, smaller id first.
    pub ends: (VertexId, VertexId),
    /// Each path as steps from `ends.0` to `ends.1`, sorted.
    pub paths: [Vec<Step>; 3],
}

impl Theta {
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut edges: Vec<EdgeId> = self.paths.iter().flatten().map(|s| s.edge).collect();
        edges.sort_unstable();
        edges
    }

    /// The three cycles, one per pair of paths.
    pub fn cycles(&self) -> [Cycle; 3] {
        let path_edges = |i: usize| self.paths[i].iter().map(|s| s.edge);
        let pair = |i: usize, j: usize| {
            Cycle::from_edges_unchecked(path_edges(i).chain(path_edges(j)).collect())
        };
        [pair(0, 1), pair(0, 2), pair(1, 2)]
    }
}

/// The theta formed by two cycles, if their union is one: the shared edges
/// form a single path and the cycles meet nowhere else.
pub fn theta_of_pair(graph: &Multigraph, a: &Cycle, b: &Cycle) -> Option<Theta> {
    let shared = a.intersection(b);
    if shared.is_empty() || shared.len() == a.len() || shared.len() == b.len() {
        return None;
    }
    let shared_vertices = graph.vertices_of(&shared);
    if shared_vertices.len() != shared.len() + 1 {
        return None;
    }
    let va = a.vertices(graph);
    let vb = b.vertices(graph);
    let common: Vec<VertexId> = va
        .iter()
        .copied()
        .filter(|v| vb.binary_search(v).is_ok())
        .collect();
    if common != shared_vertices {
        return None;
    }
    // Branch vertices: the ends of the shared path (degree one within it).
    let mut ends: Vec<VertexId> = shared_vertices
        .iter()
        .copied()
        .filter(|&v| {
            shared
                .iter()
                .filter(|&&id| graph.edge(id).is_some_and(|e| e.tail == v || e.head == v))
                .count()
                == 1
        })
        .collect();
    ends.sort_unstable();
    let (x, y) = (ends[0], ends[1]);
    let rest_a: Vec<EdgeId> = a
        .edges()
        .iter()
        .copied()
        .filter(|e| !b.contains(*e))
        .collect();
    let rest_b: Vec<EdgeId> = b
        .edges()
        .iter()
        .copied()
        .filter(|e| !a.contains(*e))
        .collect();
    let mut paths = [
        orient_path(graph, &shared, x)?.0,
        orient_path(graph, &rest_a, x)?.0,
        orient_path(graph, &rest_b, x)?.0,
    ];
    paths.sort();
    Some(Theta {
        ends: (x, y),
        paths,
    })
}

/// Every theta subgraph exactly once.
pub fn enumerate_thetas(graph: &Multigraph) -> Result<Vec<Theta>> {
    enumerate_thetas_capped(graph, DEFAULT_CYCLE_CAP)
}

pub fn enumerate_thetas_capped(graph: &Multigraph, cap: usize) -> Result<Vec<Theta>> {
    let cycles = enumerate_cycles_capped(graph, None, cap)?;
    let mut found: BTreeMap<Vec<EdgeId>, Theta> = BTreeMap::new();
    for (i, a) in cycles.iter().enumerate() {
        for b in &cycles[i + 1..] {
            if let Some(theta) = theta_of_pair(graph, a, b) {
                found.entry(theta.edge_set()).or_insert(theta);
                if found.len() > cap {
                    return Err(Error::ResourceLimit {
                        what: "thetas",
                        limit: cap,
                    });
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parallel(m: u32) -> Multigraph {
        let mut g = Multigraph::with_vertices(2);
        for i in 0..m {
            g.add_edge(EdgeId(i), VertexId(0), VertexId(1)).unwrap();
        }
        g
    }

    fn complete(n: u32) -> Multigraph {
        let mut g = Multigraph::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                g.push_edge(VertexId(u), VertexId(v)).unwrap();
            }
        }
        g
    }

    fn is_cycle_subset(g: &Multigraph, edges: &[EdgeId]) -> bool {
        Cycle::from_edges_unchecked(edges.to_vec()).is_cycle_in(g)
    }

    /// Exhaustive subset oracle: connected, two vertices of degree 3, the rest
    /// of degree 2, and no bridge.
    fn is_theta_subset(g: &Multigraph, edges: &[EdgeId]) -> bool {
        let sub = g.edge_subgraph(edges).unwrap();
        let degrees: Vec<usize> = sub.vertices().map(|v| sub.degree(v)).collect();
        if degrees.iter().filter(|&&d| d == 3).count() != 2
            || degrees.iter().any(|&d| d != 2 && d != 3)
            || !sub.is_connected()
        {
            return false;
        }
        edges.iter().all(|&e| {
            let mut without = sub.clone();
            without.remove_edge(e).unwrap();
            without.is_connected()
        })
    }

    fn subsets(g: &Multigraph) -> impl Iterator<Item = Vec<EdgeId>> + '_ {
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        (1u32..(1 << ids.len())).map(move |mask| {
            ids.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect()
        })
    }

    #[test]
    fn triangle_has_one_cycle() {
        let g = complete(3);
        assert_eq!(enumerate_cycles(&g, None).unwrap().len(), 1);
    }

    #[test]
    fn four_parallel_edges_give_six_digons() {
        let cycles = enumerate_cycles(&parallel(4), None).unwrap();
        assert_eq!(cycles.len(), 6);
        assert!(cycles.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn length_bound_and_cap() {
        let g = complete(5);
        let all = enumerate_cycles(&g, None).unwrap();
        assert_eq!(all.len(), 37);
        let short = enumerate_cycles(&g, Some(3)).unwrap();
        assert_eq!(short.len(), 10);
        assert!(matches!(
            enumerate_cycles_capped(&g, None, 20),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn k4_cycles_and_thetas_match_subset_oracle() {
        let g = complete(4);
        let cycles = enumerate_cycles(&g, None).unwrap();
        let oracle_cycles = subsets(&g).filter(|s| is_cycle_subset(&g, s)).count();
        assert_eq!(cycles.len(), oracle_cycles);
        let thetas = enumerate_thetas(&g).unwrap();
        let oracle_thetas = subsets(&g).filter(|s| is_theta_subset(&g, s)).count();
        assert_eq!(thetas.len(), oracle_thetas);
        assert_eq!(thetas.len(), 6);
        for theta in &thetas {
            for c in theta.cycles() {
                assert!(c.is_cycle_in(&g));
            }
        }
    }

    #[test]
    fn three_parallel_edges_form_one_theta() {
        let thetas = enumerate_thetas(&parallel(3)).unwrap();
        assert_eq!(thetas.len(), 1);
        assert_eq!(thetas[0].ends, (VertexId(0), VertexId(1)));
    }

    #[test]
    fn trees_have_no_cycles_or_thetas() {
        let mut g = Multigraph::with_vertices(5);
        for v in 1..5 {
            g.push_edge(VertexId(0), VertexId(v)).unwrap();
        }
        assert!(enumerate_cycles(&g, None).unwrap().is_empty());
        assert!(enumerate_thetas(&g).unwrap().is_empty());
    }

    #[test]
    fn doubled_triangle_matches_subset_oracle() {
        let mut g = Multigraph::with_vertices(3);
        for copy in 0..2 {
            for i in 0..3u32 {
                g.add_edge(EdgeId(copy * 3 + i), VertexId(i), VertexId((i + 1) % 3))
                    .unwrap();
            }
        }
        let cycles = enumerate_cycles(&g, None).unwrap();
        assert_eq!(
            cycles.len(),
            subsets(&g).filter(|s| is_cycle_subset(&g, s)).count()
        );
        assert_eq!(cycles.len(), 3 + 8);
        let thetas = enumerate_thetas(&g).unwrap();
        assert_eq!(
            thetas.len(),
            subsets(&g).filter(|s| is_theta_subset(&g, s)).count()
        );
    }
}
