//! Biased graphs: a multigraph together with a theta-closed set of balanced
//! cycles, plus single-edge minors, isomorphism and minor containment.

mod iso;
mod minor;

use std::collections::BTreeSet;

pub use iso::{isomorphic, Isomorphism};
pub use minor::{
    is_minor, is_minor_with_limit, verify_antichain, AntichainVerdict, MinorOp, MinorWitness,
    DEFAULT_NODE_LIMIT,
};

use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, theta_of_pair, Cycle, EdgeId, Multigraph, Theta};

/// A theta subgraph with exactly two balanced cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaViolation {
    pub theta: Theta,
    pub balanced_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiasedGraph {
    graph: Multigraph,
    balanced: BTreeSet<Cycle>,
}

impl BiasedGraph {
    /// Checks that every balanced set is a cycle of `graph` and that the theta
    /// property holds.
    pub fn new(graph: Multigraph, balanced: impl IntoIterator<Item = Cycle>) -> Result<Self> {
        let balanced: BTreeSet<Cycle> = balanced.into_iter().collect();
        for c in &balanced {
            if !c.is_cycle_in(&graph) {
                return Err(Error::NotACycle(c.to_string()));
            }
        }
        let bg = BiasedGraph { graph, balanced };
        if let Err(v) = bg.validate_theta() {
            return Err(Error::ThetaViolation {
                edges: v.theta.edge_set(),
            });
        }
        Ok(bg)
    }

    pub fn new_unchecked(graph: Multigraph, balanced: BTreeSet<Cycle>) -> Self {
        BiasedGraph { graph, balanced }
    }

    /// Every cycle balanced.
    pub fn ordinary(graph: Multigraph) -> Result<Self> {
        let balanced = enumerate_cycles(&graph, None)?.into_iter().collect();
        Ok(BiasedGraph { graph, balanced })
    }

    /// No cycle balanced.
    pub fn contrabalanced(graph: Multigraph) -> Self {
        BiasedGraph {
            graph,
            balanced: BTreeSet::new(),
        }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn balanced(&self) -> &BTreeSet<Cycle> {
        &self.balanced
    }

    pub fn is_balanced(&self, cycle: &Cycle) -> bool {
        self.balanced.contains(cycle)
    }

    pub fn unbalanced_cycles(&self) -> Result<Vec<Cycle>> {
        Ok(enumerate_cycles(&self.graph, None)?
            .into_iter()
            .filter(|c| !self.balanced.contains(c))
            .collect())
    }

    /// A theta contains two balanced cycles exactly when it is the union of
    /// two balanced cycles, so checking pairs of balanced cycles is complete.
    pub fn validate_theta(&self) -> std::result::Result<(), ThetaViolation> {
        let balanced: Vec<&Cycle> = self.balanced.iter().collect();
        for (i, a) in balanced.iter().enumerate() {
            for b in &balanced[i + 1..] {
                let Some(theta) = theta_of_pair(&self.graph, a, b) else {
                    continue;
                };
                let third = Cycle::from_edges_unchecked(a.symmetric_difference(b));
                if !self.balanced.contains(&third) {
                    return Err(ThetaViolation {
                        theta,
                        balanced_count: 2,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Self> {
        let mut graph = self.graph.clone();
        graph.remove_edge(e)?;
        let balanced = self
            .balanced
            .iter()
            .filter(|c| !c.contains(e))
            .cloned()
            .collect();
        let out = BiasedGraph { graph, balanced };
        Ok(out)
    }

    /// Contracting a balanced loop deletes it; contracting an unbalanced loop
    /// is refused. For a non-loop edge the larger endpoint id is merged into
    /// the smaller, and a cycle of the result is balanced iff it, or it plus
    /// `e`, was balanced before.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Self> {
        let edge = self.graph.try_edge(e)?;
        if edge.is_loop() {
            let as_cycle = Cycle::from_edges_unchecked(vec![e]);
            return if self.balanced.contains(&as_cycle) {
                self.delete_edge(e)
            } else {
                Err(Error::UnbalancedLoopContraction(e))
            };
        }
        let (keep, drop) = edge.ends();
        let mut graph = self.graph.clone();
        graph.remove_edge(e)?;
        graph.merge_vertices(keep, drop);
        let mut balanced = BTreeSet::new();
        for c in &self.balanced {
            if c.contains(e) {
                let rest: Vec<EdgeId> = c.edges().iter().copied().filter(|&f| f != e).collect();
                balanced.insert(Cycle::from_edges_unchecked(rest));
            } else {
                let vs = c.vertices(&self.graph);
                let through_both = vs.contains(&keep) && vs.contains(&drop);
                if !through_both {
                    balanced.insert(c.clone());
                }
            }
        }
        let out = BiasedGraph { graph, balanced };
        Ok(out)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}
