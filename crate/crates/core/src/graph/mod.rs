//! Multigraphs with stable edge identities, closed walks, cycles, and plane
//! embeddings given by rotation systems.

mod connectivity;
mod cycles;
mod plane;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

pub use connectivity::{is_3connected, is_subdivision_of_3connected, suppress_degree_two};
pub use cycles::{
    enumerate_cycles, enumerate_cycles_capped, enumerate_thetas, enumerate_thetas_capped,
    theta_of_pair, Theta, DEFAULT_CYCLE_CAP,
};
pub use plane::PlaneGraph;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Endpoints of an edge in its reference orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Edge { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint opposite `v`. For a loop this is `v` itself.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }

    /// Unordered endpoint pair, smaller id first.
    pub fn ends(&self) -> (VertexId, VertexId) {
        if self.tail <= self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

/// A finite multigraph. Loops and parallel edges are allowed and edge ids are
/// never renumbered by the operations in this crate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: u32) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(VertexId(v));
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    pub fn add_edge(&mut self, id: EdgeId, tail: VertexId, head: VertexId) -> Result<()> {
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        for v in [tail, head] {
            if !self.vertices.contains(&v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        self.edges.insert(id, Edge::new(tail, head));
        Ok(())
    }

    /// Adds an edge under the next unused id and returns that id.
    pub fn push_edge(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeId> {
        let id = self.next_edge_id();
        self.add_edge(id, tail, head)?;
        Ok(id)
    }

    pub fn next_edge_id(&self) -> EdgeId {
        self.edges
            .keys()
            .next_back()
            .map_or(EdgeId(0), |e| EdgeId(e.0 + 1))
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Result<Edge> {
        self.edges.remove(&id).ok_or(Error::UnknownEdge(id))
    }

    /// Merges `drop` into `keep`: every edge end at `drop` is moved to `keep`
    /// and `drop` leaves the vertex set.
    pub fn merge_vertices(&mut self, keep: VertexId, drop: VertexId) {
        if keep == drop {
            return;
        }
        for edge in self.edges.values_mut() {
            if edge.tail == drop {
                edge.tail = keep;
            }
            if edge.head == drop {
                edge.head = keep;
            }
        }
        self.vertices.remove(&drop);
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Edge)> + '_ {
        self.edges.iter().map(|(&id, &e)| (id, e))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge(&self, id: EdgeId) -> Option<Edge> {
        self.edges.get(&id).copied()
    }

    pub fn try_edge(&self, id: EdgeId) -> Result<Edge> {
        self.edge(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edges.contains_key(&id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree of `v`, counting a loop twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .values()
            .map(|e| usize::from(e.tail == v) + usize::from(e.head == v))
            .sum()
    }

    /// For every vertex, its incident `(edge, other end)` pairs in edge-id
    /// order. A loop is listed once.
    pub fn incidence(&self) -> BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> {
        let mut inc: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (&id, e) in &self.edges {
            inc.get_mut(&e.tail).expect("endpoint").push((id, e.head));
            if !e.is_loop() {
                inc.get_mut(&e.head).expect("endpoint").push((id, e.tail));
            }
        }
        inc
    }

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let key = Edge::new(u, v).ends();
        self.edges.values().filter(|e| e.ends() == key).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .values()
            .all(|e| !e.is_loop() && seen.insert(e.ends()))
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let inc = self.incidence();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(_, w) in &inc[&v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Subgraph on the given edges and their endpoints.
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Result<Multigraph> {
        let mut sub = Multigraph::new();
        for &id in edges {
            let e = self.try_edge(id)?;
            sub.add_vertex(e.tail);
            sub.add_vertex(e.head);
            sub.add_edge(id, e.tail, e.head)?;
        }
        Ok(sub)
    }

    /// Endpoints of the given edges, sorted and deduplicated.
    pub fn vertices_of(&self, edges: &[EdgeId]) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = edges
            .iter()
            .filter_map(|&id| self.edge(id))
            .flat_map(|e| [e.tail, e.head])
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Deterministic breadth-first spanning tree of a connected graph.
    pub fn spanning_tree(&self) -> Result<Vec<EdgeId>> {
        let Some(&root) = self.vertices.iter().next() else {
            return Ok(Vec::new());
        };
        let inc = self.incidence();
        let mut seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        let mut tree = Vec::new();
        while let Some(v) = queue.pop_front() {
            for &(id, w) in &inc[&v] {
                if seen.insert(w) {
                    tree.push(id);
                    queue.push_back(w);
                }
            }
        }
        if seen.len() != self.vertices.len() {
            return Err(Error::Disconnected);
        }
        tree.sort_unstable();
        Ok(tree)
    }
}

/// A cycle, stored as its sorted edge-id set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<EdgeId>);

impl Cycle {
    /// Wraps an edge set without checking that it forms a cycle.
    pub fn from_edges_unchecked(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Cycle(edges)
    }

    /// Builds a cycle after checking that `edges` induce a connected 2-regular
    /// subgraph of `graph`.
    pub fn new(graph: &Multigraph, edges: Vec<EdgeId>) -> Result<Self> {
        let cycle = Self::from_edges_unchecked(edges);
        if cycle.is_cycle_in(graph) {
            Ok(cycle)
        } else {
            Err(Error::NotACycle(format!("{:?}", cycle.edge_ids())))
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn edge_ids(&self) -> Vec<u32> {
        self.0.iter().map(|e| e.0).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn vertices(&self, graph: &Multigraph) -> Vec<VertexId> {
        graph.vertices_of(&self.0)
    }

    pub fn is_cycle_in(&self, graph: &Multigraph) -> bool {
        if self.0.is_empty() {
            return false;
        }
        let Ok(sub) = graph.edge_subgraph(&self.0) else {
            return false;
        };
        sub.vertices().all(|v| sub.degree(v) == 2) && sub.is_connected()
    }

    /// Edges shared with `other`.
    pub fn intersection(&self, other: &Cycle) -> Vec<EdgeId> {
        self.0
            .iter()
            .copied()
            .filter(|&e| other.contains(e))
            .collect()
    }

    /// Edges in exactly one of the two cycles.
    pub fn symmetric_difference(&self, other: &Cycle) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .0
            .iter()
            .copied()
            .filter(|&e| !other.contains(e))
            .chain(other.0.iter().copied().filter(|&e| !self.contains(e)))
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One traversal of an edge; `forward` follows the reference orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Step {
    pub fn new(edge: EdgeId, forward: bool) -> Self {
        Step { edge, forward }
    }

    pub fn reversed(self) -> Self {
        Step {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    pub fn start(self, graph: &Multigraph) -> Option<VertexId> {
        let e = graph.edge(self.edge)?;
        Some(if self.forward { e.tail } else { e.head })
    }

    pub fn end(self, graph: &Multigraph) -> Option<VertexId> {
        let e = graph.edge(self.edge)?;
        Some(if self.forward { e.head } else { e.tail })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.forward { '+' } else { '-' }, self.edge)
    }
}

/// A nonempty closed walk, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosedWalk {
    steps: Vec<Step>,
}

impl ClosedWalk {
    /// Checks that consecutive steps meet and that the walk closes up.
    pub fn new(graph: &Multigraph, steps: Vec<Step>) -> Result<Self> {
        let walk = ClosedWalk { steps };
        walk.check(graph)?;
        Ok(walk)
    }

    pub fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        ClosedWalk { steps }
    }

    pub fn check(&self, graph: &Multigraph) -> Result<()> {
        if self.steps.is_empty() {
            return Err(Error::InvalidWalk("empty walk".into()));
        }
        let n = self.steps.len();
        for i in 0..n {
            let here = self.steps[i];
            let next = self.steps[(i + 1) % n];
            let end = here
                .end(graph)
                .ok_or_else(|| Error::InvalidWalk(format!("unknown edge {}", here.edge)))?;
            let start = next
                .start(graph)
                .ok_or_else(|| Error::InvalidWalk(format!("unknown edge {}", next.edge)))?;
            if end != start {
                return Err(Error::InvalidWalk(format!(
                    "step {} ends at {} but step {} starts at {}",
                    i,
                    end,
                    (i + 1) % n,
                    start
                )));
            }
        }
        Ok(())
    }

    /// The simple closed walk around `cycle`, starting with its smallest edge
    /// traversed forward.
    pub fn around(graph: &Multigraph, cycle: &Cycle) -> Result<Self> {
        let first = *cycle
            .edges()
            .first()
            .ok_or_else(|| Error::NotACycle("empty".into()))?;
        let e = graph.try_edge(first)?;
        let mut steps = vec![Step::new(first, true)];
        let mut used = BTreeSet::from([first]);
        let mut at = e.head;
        while at != e.tail || steps.len() < cycle.len() {
            let next = cycle
                .edges()
                .iter()
                .copied()
                .find(|id| {
                    !used.contains(id)
                        && graph
                            .edge(*id)
                            .is_some_and(|f| f.tail == at || f.head == at)
                })
                .ok_or_else(|| Error::NotACycle(cycle.to_string()))?;
            let f = graph.try_edge(next)?;
            let forward = f.tail == at;
            steps.push(Step::new(next, forward));
            used.insert(next);
            at = f.other(at);
        }
        if steps.len() != cycle.len() {
            return Err(Error::NotACycle(cycle.to_string()));
        }
        ClosedWalk::new(graph, steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex sequence: entry `i` is the start of step `i`.
    pub fn vertices(&self, graph: &Multigraph) -> Vec<VertexId> {
        self.steps
            .iter()
            .map(|s| s.start(graph).expect("walk edge in host"))
            .collect()
    }

    pub fn reversed(&self) -> Self {
        ClosedWalk {
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut steps = self.steps.clone();
        if !steps.is_empty() {
            let k = k % steps.len();
            steps.rotate_left(k);
        }
        ClosedWalk { steps }
    }

    /// Least rotation of the step sequence.
    pub fn least_rotation(&self) -> Self {
        (0..self.steps.len().max(1))
            .map(|k| self.rotated(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Least rotation over both traversal directions.
    pub fn canonical(&self) -> Self {
        self.least_rotation().min(self.reversed().least_rotation())
    }

    /// Equal as cyclic sequences (same direction).
    pub fn same_closed_walk(&self, other: &ClosedWalk) -> bool {
        self.len() == other.len() && self.least_rotation() == other.least_rotation()
    }

    /// A simple closed walk visits no vertex twice.
    pub fn is_simple(&self, graph: &Multigraph) -> bool {
        let vs = self.vertices(graph);
        let distinct: BTreeSet<_> = vs.iter().collect();
        distinct.len() == vs.len()
    }

    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut edges: Vec<EdgeId> = self.steps.iter().map(|s| s.edge).collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// The cycle traced by a simple closed walk.
    pub fn as_cycle(&self, graph: &Multigraph) -> Option<Cycle> {
        if !self.is_simple(graph) {
            return None;
        }
        let cycle = Cycle::from_edges_unchecked(self.edge_set());
        (cycle.len() == self.len() && cycle.is_cycle_in(graph)).then_some(cycle)
    }
}

impl fmt::Display for ClosedWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Orders the edges of a path so that it is traversed starting at `from`.
/// Returns the steps and the far endpoint.
pub fn orient_path(
    graph: &Multigraph,
    edges: &[EdgeId],
    from: VertexId,
) -> Option<(Vec<Step>, VertexId)> {
    let mut remaining: Vec<EdgeId> = edges.to_vec();
    let mut steps = Vec::with_capacity(edges.len());
    let mut at = from;
    while !remaining.is_empty() {
        let pos = remaining.iter().position(|&id| {
            graph
                .edge(id)
                .is_some_and(|e| !e.is_loop() && (e.tail == at || e.head == at))
        })?;
        let id = remaining.swap_remove(pos);
        let e = graph.edge(id)?;
        steps.push(Step::new(id, e.tail == at));
        at = e.other(at);
    }
    Some((steps, at))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        let mut g = Multigraph::with_vertices(3);
        g.add_edge(EdgeId(0), VertexId(0), VertexId(1)).unwrap();
        g.add_edge(EdgeId(1), VertexId(1), VertexId(2)).unwrap();
        g.add_edge(EdgeId(2), VertexId(0), VertexId(2)).unwrap();
        g
    }

    #[test]
    fn edge_ids_are_checked() {
        let mut g = triangle();
        assert_eq!(
            g.add_edge(EdgeId(1), VertexId(0), VertexId(0)),
            Err(Error::DuplicateEdge(EdgeId(1)))
        );
        assert_eq!(
            g.add_edge(EdgeId(9), VertexId(0), VertexId(7)),
            Err(Error::UnknownVertex(VertexId(7)))
        );
        assert_eq!(g.next_edge_id(), EdgeId(3));
    }

    #[test]
    fn walk_around_triangle_closes() {
        let g = triangle();
        let c = Cycle::new(&g, vec![EdgeId(2), EdgeId(0), EdgeId(1)]).unwrap();
        let w = ClosedWalk::around(&g, &c).unwrap();
        assert_eq!(w.to_string(), "+0 +1 -2");
        assert!(w.is_simple(&g));
        assert_eq!(w.as_cycle(&g), Some(c));
        assert!(w.reversed().check(&g).is_ok());
        assert!(w.same_closed_walk(&w.rotated(2)));
        assert!(!w.same_closed_walk(&w.reversed()));
        assert_eq!(w.canonical(), w.reversed().rotated(1).canonical());
    }

    #[test]
    fn broken_walk_is_rejected() {
        let g = triangle();
        let bad = ClosedWalk::new(
            &g,
            vec![Step::new(EdgeId(0), true), Step::new(EdgeId(2), true)],
        );
        assert!(matches!(bad, Err(Error::InvalidWalk(_))));
        assert!(ClosedWalk::new(&g, Vec::new()).is_err());
    }

    #[test]
    fn loops_and_parallel_pairs_are_cycles() {
        let mut g = Multigraph::with_vertices(2);
        g.add_edge(EdgeId(0), VertexId(0), VertexId(0)).unwrap();
        g.add_edge(EdgeId(1), VertexId(0), VertexId(1)).unwrap();
        g.add_edge(EdgeId(2), VertexId(1), VertexId(0)).unwrap();
        assert!(Cycle::new(&g, vec![EdgeId(0)]).is_ok());
        let pair = Cycle::new(&g, vec![EdgeId(1), EdgeId(2)]).unwrap();
        let w = ClosedWalk::around(&g, &pair).unwrap();
        assert_eq!(w.to_string(), "+1 +2");
        assert!(Cycle::new(&g, vec![EdgeId(0), EdgeId(1)]).is_err());
        assert!(!g.is_simple());
    }

    #[test]
    fn merge_moves_edge_ends() {
        let mut g = triangle();
        g.remove_edge(EdgeId(0)).unwrap();
        g.merge_vertices(VertexId(0), VertexId(1));
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge(EdgeId(1)), Some(Edge::new(VertexId(0), VertexId(2))));
        assert_eq!(g.multiplicity(VertexId(2), VertexId(0)), 2);
    }
}
