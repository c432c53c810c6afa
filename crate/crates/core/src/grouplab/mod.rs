//! Labellings of a multigraph by elements of a free group, the balanced
//! cycles they determine, and the labellings used to show particular biased
//! graphs are group labellable.

mod eliminate;
mod presentation;
mod proofs;
mod word;

use std::collections::{BTreeMap, BTreeSet};

pub use eliminate::{eliminate_relators, free_labelling};
pub use presentation::{presentation, tautological_labelling, GroupPresentation};
pub use proofs::{
    label_2cn, label_antichain_member, label_contraction, label_deletion, verify_proper_minors,
    verify_proper_minors_of, MinorCheck,
};
pub use word::{FreeWord, Letter, ParseWordError};

use crate::bias::BiasedGraph;
use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, ClosedWalk, Cycle, EdgeId, Multigraph};

/// An assignment of a free-group element to every edge, read along the
/// edge's tail-to-head orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupLabelling {
    host: Multigraph,
    values: BTreeMap<EdgeId, FreeWord>,
}

impl GroupLabelling {
    pub fn new(host: Multigraph, values: BTreeMap<EdgeId, FreeWord>) -> Result<Self> {
        if let Some(&e) = values.keys().find(|e| !host.contains_edge(**e)) {
            return Err(Error::UnknownEdge(e));
        }
        if let Some(e) = host.edge_ids().find(|e| !values.contains_key(e)) {
            return Err(Error::UnknownEdge(e));
        }
        Ok(GroupLabelling { host, values })
    }

    /// Every edge labelled by the identity.
    pub fn trivial(host: Multigraph) -> Self {
        let values = host.edge_ids().map(|e| (e, FreeWord::identity())).collect();
        GroupLabelling { host, values }
    }

    pub fn host(&self) -> &Multigraph {
        &self.host
    }

    pub fn value(&self, e: EdgeId) -> Option<&FreeWord> {
        self.values.get(&e)
    }

    pub fn values(&self) -> &BTreeMap<EdgeId, FreeWord> {
        &self.values
    }

    /// Product of the edge values along the walk, each inverted when the
    /// edge is traversed head to tail.
    pub fn walk_value(&self, walk: &ClosedWalk) -> Result<FreeWord> {
        walk.check(&self.host)?;
        let letters = walk.steps().iter().flat_map(|s| {
            let w = &self.values[&s.edge];
            let letters: Vec<Letter> = if s.forward {
                w.letters().to_vec()
            } else {
                w.inverse().letters().to_vec()
            };
            letters
        });
        Ok(FreeWord::reduce(letters))
    }

    /// Cycles whose closed walks have identity value.
    pub fn balanced_set(&self) -> Result<BTreeSet<Cycle>> {
        let mut out = BTreeSet::new();
        for c in enumerate_cycles(&self.host, None)? {
            let walk = ClosedWalk::around(&self.host, &c)?;
            if self.walk_value(&walk)?.is_identity() {
                out.insert(c);
            }
        }
        Ok(out)
    }

    pub fn biased_graph(&self) -> Result<BiasedGraph> {
        BiasedGraph::new(self.host.clone(), self.balanced_set()?)
    }

    pub fn realizes(&self, bg: &BiasedGraph) -> Result<bool> {
        if bg.graph() != &self.host {
            return Err(Error::HostMismatch);
        }
        Ok(&self.balanced_set()? == bg.balanced())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Step, VertexId};
    use proptest::prelude::*;

    fn triangle() -> Multigraph {
        let mut g = Multigraph::with_vertices(3);
        for i in 0..3 {
            g.push_edge(VertexId(i), VertexId((i + 1) % 3)).unwrap();
        }
        g
    }

    #[test]
    fn trivial_labelling_balances_everything() {
        let mut g = triangle();
        g.push_edge(VertexId(0), VertexId(1)).unwrap();
        let phi = GroupLabelling::trivial(g.clone());
        let all: BTreeSet<Cycle> = enumerate_cycles(&g, None).unwrap().into_iter().collect();
        assert_eq!(phi.balanced_set().unwrap(), all);
        assert!(phi.realizes(&BiasedGraph::ordinary(g).unwrap()).unwrap());
    }

    #[test]
    fn backwards_loop_inverts() {
        let mut g = Multigraph::with_vertices(1);
        g.push_edge(VertexId(0), VertexId(0)).unwrap();
        let phi = GroupLabelling::new(g, [(EdgeId(0), FreeWord::generator(1))].into()).unwrap();
        let w = ClosedWalk::from_steps_unchecked(vec![Step::new(EdgeId(0), false)]);
        assert_eq!(
            phi.walk_value(&w).unwrap(),
            FreeWord::generator(1).inverse()
        );
    }

    #[test]
    fn one_nontrivial_edge_unbalances_the_cycle() {
        let g = triangle();
        let mut values: BTreeMap<EdgeId, FreeWord> =
            g.edge_ids().map(|e| (e, FreeWord::identity())).collect();
        values.insert(EdgeId(1), FreeWord::generator(1));
        let phi = GroupLabelling::new(g.clone(), values).unwrap();
        assert!(phi.balanced_set().unwrap().is_empty());
        let mut other = g.clone();
        other.push_edge(VertexId(0), VertexId(2)).unwrap();
        assert_eq!(
            phi.realizes(&BiasedGraph::ordinary(other).unwrap()),
            Err(Error::HostMismatch)
        );
    }

    #[test]
    fn missing_values_are_rejected() {
        assert!(matches!(
            GroupLabelling::new(triangle(), BTreeMap::new()),
            Err(Error::UnknownEdge(_))
        ));
    }

    fn labelled_k4() -> impl Strategy<Value = GroupLabelling> {
        prop::collection::vec(prop::collection::vec((0u32..2, any::<bool>()), 0..3), 8).prop_map(
            |raw| {
                let mut g = Multigraph::with_vertices(4);
                for u in 0..4 {
                    for v in u + 1..4 {
                        g.push_edge(VertexId(u), VertexId(v)).unwrap();
                    }
                }
                g.push_edge(VertexId(0), VertexId(1)).unwrap();
                g.push_edge(VertexId(2), VertexId(2)).unwrap();
                let values = g
                    .edge_ids()
                    .zip(raw)
                    .map(|(e, ls)| {
                        (
                            e,
                            FreeWord::reduce(ls.into_iter().map(|(k, i)| Letter::new(k, i))),
                        )
                    })
                    .collect();
                GroupLabelling::new(g, values).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn identity_status_ignores_base_point_and_direction(phi in labelled_k4(), shift in 0usize..6) {
            for c in enumerate_cycles(phi.host(), None).unwrap() {
                let w = ClosedWalk::around(phi.host(), &c).unwrap();
                let base = phi.walk_value(&w).unwrap();
                let rotated = phi.walk_value(&w.rotated(shift % w.len())).unwrap();
                let reversed = phi.walk_value(&w.reversed()).unwrap();
                prop_assert_eq!(base.is_identity(), rotated.is_identity());
                prop_assert_eq!(reversed, base.inverse());
                prop_assert_eq!(base.cyclically_reduced().len(), rotated.cyclically_reduced().len());
            }
        }

        #[test]
        fn labellings_give_biased_graphs(phi in labelled_k4()) {
            let b = BiasedGraph::new_unchecked(phi.host().clone(), phi.balanced_set().unwrap());
            prop_assert!(b.validate_theta().is_ok());
        }
    }
}
