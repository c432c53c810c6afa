use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{FreeWord, GroupLabelling, Letter};
use crate::bias::BiasedGraph;
use crate::error::{Error, Result};
use crate::graph::{ClosedWalk, Cycle, EdgeId, Multigraph};

/// Generator `g_k` stands for the non-tree edge `generators[k]`; each
/// balanced cycle contributes the relator read off its closed walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<EdgeId>,
    pub relators: Vec<(Cycle, FreeWord)>,
}

impl GroupPresentation {
    pub fn generator_of(&self, e: EdgeId) -> Option<u32> {
        self.generators
            .iter()
            .position(|&g| g == e)
            .map(|k| k as u32)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, e) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "g{k}={e}")?;
        }
        write!(f, " |")?;
        for (k, (_, r)) in self.relators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {r}")?;
        }
        write!(f, ">")
    }
}

fn check_tree(graph: &Multigraph, tree: &[EdgeId]) -> Result<BTreeSet<EdgeId>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let set: BTreeSet<EdgeId> = tree.iter().copied().collect();
    if set.len() != tree.len() {
        return Err(Error::NotSpanningTree("repeated edge".into()));
    }
    for &e in &set {
        if !graph.contains_edge(e) {
            return Err(Error::UnknownEdge(e));
        }
    }
    if set.len() + 1 != graph.vertex_count() {
        return Err(Error::NotSpanningTree(format!(
            "{} edges for {} vertices",
            set.len(),
            graph.vertex_count()
        )));
    }
    let edges: Vec<EdgeId> = set.iter().copied().collect();
    let sub = graph.edge_subgraph(&edges)?;
    if sub.vertex_count() != graph.vertex_count() && graph.vertex_count() > 1 || !sub.is_connected()
    {
        return Err(Error::NotSpanningTree(
            "does not connect every vertex".into(),
        ));
    }
    Ok(set)
}

/// Contracting the tree leaves a bouquet of loops, one per non-tree edge;
/// gluing a disc along each balanced cycle adds one relator per cycle.
pub fn presentation(bg: &BiasedGraph, tree: &[EdgeId]) -> Result<GroupPresentation> {
    let graph = bg.graph();
    let tree = check_tree(graph, tree)?;
    let generators: Vec<EdgeId> = graph.edge_ids().filter(|e| !tree.contains(e)).collect();
    let index: BTreeMap<EdgeId, u32> = generators
        .iter()
        .enumerate()
        .map(|(k, &e)| (e, k as u32))
        .collect();
    let mut relators = Vec::new();
    for c in bg.balanced() {
        let walk = ClosedWalk::around(graph, c)?;
        let letters = walk
            .steps()
            .iter()
            .filter_map(|s| index.get(&s.edge).map(|&k| Letter::new(k, !s.forward)));
        relators.push((c.clone(), FreeWord::reduce(letters)));
    }
    Ok(GroupPresentation {
        generators,
        relators,
    })
}

/// Tree edges get the identity and each non-tree edge its own generator,
/// in the free group on the presentation's generators.
pub fn tautological_labelling(
    bg: &BiasedGraph,
    tree: &[EdgeId],
) -> Result<(GroupLabelling, GroupPresentation)> {
    let pres = presentation(bg, tree)?;
    let values = bg
        .graph()
        .edge_ids()
        .map(|e| {
            let w = match pres.generator_of(e) {
                Some(k) => FreeWord::generator(k),
                None => FreeWord::identity(),
            };
            (e, w)
        })
        .collect();
    let phi = GroupLabelling::new(bg.graph().clone(), values)?;
    Ok((phi, pres))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_cycles, VertexId};

    fn doubled_triangle() -> BiasedGraph {
        let mut g = Multigraph::with_vertices(3);
        for copy in 0..2 {
            for i in 0..3 {
                g.add_edge(EdgeId(copy * 3 + i), VertexId(i), VertexId((i + 1) % 3))
                    .unwrap();
            }
        }
        let a = Cycle::from_edges_unchecked(vec![EdgeId(0), EdgeId(1), EdgeId(2)]);
        let b = Cycle::from_edges_unchecked(vec![EdgeId(3), EdgeId(4), EdgeId(5)]);
        BiasedGraph::new(g, [a, b]).unwrap()
    }

    #[test]
    fn tree_plus_unbalanced_loop() {
        let mut g = Multigraph::with_vertices(2);
        g.push_edge(VertexId(0), VertexId(1)).unwrap();
        g.push_edge(VertexId(1), VertexId(1)).unwrap();
        let bg = BiasedGraph::contrabalanced(g);
        let p = presentation(&bg, &[EdgeId(0)]).unwrap();
        assert_eq!(p.generators, vec![EdgeId(1)]);
        assert!(p.relators.is_empty());
        let (phi, _) = tautological_labelling(&bg, &[EdgeId(0)]).unwrap();
        assert_eq!(phi.value(EdgeId(1)), Some(&FreeWord::generator(0)));
        assert!(phi.realizes(&bg).unwrap());
    }

    #[test]
    fn doubled_triangle_counts() {
        let bg = doubled_triangle();
        let p = presentation(&bg, &[EdgeId(0), EdgeId(1)]).unwrap();
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.relators.len(), 2);
        // The tree's own triangle gives a single-letter relator.
        assert_eq!(p.relators[0].1, FreeWord::generator(0));
    }

    #[test]
    fn ordinary_graph_counts() {
        let mut g = Multigraph::with_vertices(4);
        for u in 0..4 {
            for v in u + 1..4 {
                g.push_edge(VertexId(u), VertexId(v)).unwrap();
            }
        }
        let tree = g.spanning_tree().unwrap();
        let bg = BiasedGraph::ordinary(g.clone()).unwrap();
        let p = presentation(&bg, &tree).unwrap();
        assert_eq!(p.generators.len(), 6 - 4 + 1);
        assert_eq!(p.relators.len(), enumerate_cycles(&g, None).unwrap().len());
        for (_, r) in &p.relators {
            assert!(r.generators().all(|k| (k as usize) < p.generators.len()));
        }
    }

    #[test]
    fn relators_are_walk_values_of_the_tautological_labelling() {
        let bg = doubled_triangle();
        let (phi, p) = tautological_labelling(&bg, &[EdgeId(3), EdgeId(1)]).unwrap();
        for (c, r) in &p.relators {
            let walk = ClosedWalk::around(bg.graph(), c).unwrap();
            assert_eq!(&phi.walk_value(&walk).unwrap(), r);
        }
    }

    #[test]
    fn bad_trees() {
        let bg = doubled_triangle();
        assert!(matches!(
            presentation(&bg, &[EdgeId(0)]),
            Err(Error::NotSpanningTree(_))
        ));
        assert!(matches!(
            presentation(&bg, &[EdgeId(0), EdgeId(3)]),
            Err(Error::NotSpanningTree(_))
        ));
        let mut g = Multigraph::with_vertices(2);
        g.push_edge(VertexId(0), VertexId(0)).unwrap();
        assert_eq!(
            presentation(&BiasedGraph::contrabalanced(g), &[]),
            Err(Error::Disconnected)
        );
    }
}
