use std::fmt;

use super::{isomorphic, BiasedGraph, Isomorphism};
use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// Search nodes visited before [`is_minor`] gives up.
pub const DEFAULT_NODE_LIMIT: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinorOp {
    Delete(EdgeId),
    Contract(EdgeId),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOp::Delete(e) => write!(f, "delete {e}"),
            MinorOp::Contract(e) => write!(f, "contract {e}"),
        }
    }
}

/// Operations applied to the host, in order, and an isomorphism from the
/// resulting biased graph onto the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub ops: Vec<MinorOp>,
    pub isomorphism: Isomorphism,
}

impl MinorWitness {
    pub fn deleted(&self) -> Vec<EdgeId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                MinorOp::Delete(e) => Some(*e),
                MinorOp::Contract(_) => None,
            })
            .collect()
    }

    pub fn contracted(&self) -> Vec<EdgeId> {
        self.ops
            .iter()
            .filter_map(|op| match op {
                MinorOp::Contract(e) => Some(*e),
                MinorOp::Delete(_) => None,
            })
            .collect()
    }

    pub fn replay(&self, host: &BiasedGraph) -> Result<BiasedGraph> {
        let mut seen = std::collections::BTreeSet::new();
        let mut g = host.clone();
        for op in &self.ops {
            let e = match op {
                MinorOp::Delete(e) | MinorOp::Contract(e) => *e,
            };
            if !seen.insert(e) {
                return Err(Error::MinorOverlap(e));
            }
            g = match op {
                MinorOp::Delete(e) => g.delete_edge(*e)?,
                MinorOp::Contract(e) => g.contract_edge(*e)?,
            };
        }
        Ok(g)
    }

    /// Replays the operations on `host` and checks the isomorphism onto
    /// `pattern`.
    pub fn verify(&self, pattern: &BiasedGraph, host: &BiasedGraph) -> bool {
        match self.replay(host) {
            Ok(minor) => self.isomorphism.verify(&minor, pattern),
            Err(_) => false,
        }
    }
}

pub fn is_minor(pattern: &BiasedGraph, host: &BiasedGraph) -> Result<Option<MinorWitness>> {
    is_minor_with_limit(pattern, host, DEFAULT_NODE_LIMIT)
}

/// Decides whether `pattern` is isomorphic to a minor of `host` obtained by
/// deleting and contracting edges.
///
/// Every edge of the host is, in id order, kept, deleted or contracted.
/// Branches are cut once too few vertices or edges would remain, once the
/// undecided edges cannot remove the surplus, or once the number of balanced
/// cycles has fallen below the pattern's (it never grows under minors).
pub fn is_minor_with_limit(
    pattern: &BiasedGraph,
    host: &BiasedGraph,
    node_limit: usize,
) -> Result<Option<MinorWitness>> {
    let mut search = Search {
        pattern,
        target_v: pattern.vertex_count(),
        target_e: pattern.edge_count(),
        target_b: pattern.balanced().len(),
        edges: host.graph().edge_ids().collect(),
        ops: Vec::new(),
        nodes: 0,
        limit: node_limit,
    };
    search.run(host.clone(), 0)
}

struct Search<'a> {
    pattern: &'a BiasedGraph,
    target_v: usize,
    target_e: usize,
    target_b: usize,
    edges: Vec<EdgeId>,
    ops: Vec<MinorOp>,
    nodes: usize,
    limit: usize,
}

impl Search<'_> {
    fn run(&mut self, g: BiasedGraph, i: usize) -> Result<Option<MinorWitness>> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceLimit {
                what: "minor search nodes",
                limit: self.limit,
            });
        }
        let (v, e, b) = (g.vertex_count(), g.edge_count(), g.balanced().len());
        let undecided = self.edges.len() - i;
        if v < self.target_v
            || e < self.target_e
            || b < self.target_b
            || e - self.target_e > undecided
            || v - self.target_v > undecided
        {
            return Ok(None);
        }
        if e == self.target_e {
            if v != self.target_v || b != self.target_b {
                return Ok(None);
            }
            return Ok(
                isomorphic(&g, self.pattern).map(|isomorphism| MinorWitness {
                    ops: self.ops.clone(),
                    isomorphism,
                }),
            );
        }
        let id = self.edges[i];
        if let Some(found) = self.run(g.clone(), i + 1)? {
            return Ok(Some(found));
        }
        self.ops.push(MinorOp::Delete(id));
        let found = self.run(g.delete_edge(id)?, i + 1)?;
        self.ops.pop();
        if found.is_some() {
            return Ok(found);
        }
        // Contracting a balanced loop equals deleting it; an unbalanced loop
        // cannot be contracted.
        if g.graph().edge(id).is_some_and(|edge| !edge.is_loop()) {
            self.ops.push(MinorOp::Contract(id));
            let found = self.run(g.contract_edge(id)?, i + 1)?;
            self.ops.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntichainVerdict {
    Antichain,
    /// Member `minor` is a minor of member `host`.
    Comparable {
        minor: usize,
        host: usize,
        witness: MinorWitness,
    },
}

/// Checks every ordered pair of distinct members.
pub fn verify_antichain(family: &[BiasedGraph], node_limit: usize) -> Result<AntichainVerdict> {
    for (i, h) in family.iter().enumerate() {
        for (j, g) in family.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(witness) = is_minor_with_limit(h, g, node_limit)? {
                return Ok(AntichainVerdict::Comparable {
                    minor: i,
                    host: j,
                    witness,
                });
            }
        }
    }
    Ok(AntichainVerdict::Antichain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Cycle, Multigraph, VertexId};

    fn doubled(n: u32) -> BiasedGraph {
        let mut g = Multigraph::with_vertices(n);
        for copy in 0..2 {
            for i in 0..n {
                g.add_edge(EdgeId(copy * n + i), VertexId(i), VertexId((i + 1) % n))
                    .unwrap();
            }
        }
        let first = Cycle::from_edges_unchecked((0..n).map(EdgeId).collect());
        let second = Cycle::from_edges_unchecked((n..2 * n).map(EdgeId).collect());
        BiasedGraph::new(g, [first, second]).unwrap()
    }

    #[test]
    fn a_graph_is_a_minor_of_itself() {
        let g = doubled(3);
        let w = is_minor(&g, &g).unwrap().unwrap();
        assert!(w.ops.is_empty());
        assert!(w.verify(&g, &g));
    }

    #[test]
    fn doubled_cycles_are_an_antichain() {
        let family: Vec<BiasedGraph> = (2..6).map(doubled).collect();
        assert_eq!(
            verify_antichain(&family, DEFAULT_NODE_LIMIT).unwrap(),
            AntichainVerdict::Antichain
        );
    }

    #[test]
    fn contracting_gives_a_witness() {
        let big = doubled(4);
        let small = big
            .contract_edge(EdgeId(0))
            .unwrap()
            .delete_edge(EdgeId(4))
            .unwrap();
        assert_eq!(small.balanced().len(), 1);
        let w = is_minor(&small, &big).unwrap().unwrap();
        assert!(w.verify(&small, &big));
        assert!(!w.contracted().is_empty() || !w.deleted().is_empty());
    }

    #[test]
    fn node_limit_is_reported() {
        let g = doubled(5);
        let h = doubled(4);
        assert!(matches!(
            is_minor_with_limit(&h, &g, 3),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn overlapping_ops_are_rejected() {
        let g = doubled(3);
        let w = MinorWitness {
            ops: vec![MinorOp::Delete(EdgeId(0)), MinorOp::Contract(EdgeId(0))],
            isomorphism: Isomorphism {
                vertices: Default::default(),
                edges: Default::default(),
            },
        };
        assert_eq!(w.replay(&g), Err(Error::MinorOverlap(EdgeId(0))));
    }
}
