use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::BiasedGraph;
use crate::graph::{Cycle, EdgeId, VertexId};

/// A vertex bijection and an edge bijection that respect incidence and carry
/// the balanced cycles of one biased graph exactly onto those of the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

impl Isomorphism {
    /// Checks the maps independently of how they were found.
    pub fn verify(&self, a: &BiasedGraph, b: &BiasedGraph) -> bool {
        let ga = a.graph();
        let gb = b.graph();
        if ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count() {
            return false;
        }
        let vimg: BTreeSet<_> = self.vertices.values().collect();
        let eimg: BTreeSet<_> = self.edges.values().collect();
        if self.vertices.len() != ga.vertex_count()
            || vimg.len() != gb.vertex_count()
            || self.edges.len() != ga.edge_count()
            || eimg.len() != gb.edge_count()
        {
            return false;
        }
        for (id, e) in ga.edges() {
            let Some(&fid) = self.edges.get(&id) else {
                return false;
            };
            let Some(f) = gb.edge(fid) else {
                return false;
            };
            let (Some(&t), Some(&h)) = (self.vertices.get(&e.tail), self.vertices.get(&e.head))
            else {
                return false;
            };
            let mut x = [t, h];
            let mut y = [f.tail, f.head];
            x.sort_unstable();
            y.sort_unstable();
            if x != y {
                return false;
            }
        }
        let image: BTreeSet<Cycle> = a.balanced().iter().map(|c| self.map_cycle(c)).collect();
        &image == b.balanced()
    }

    pub fn map_cycle(&self, c: &Cycle) -> Cycle {
        Cycle::from_edges_unchecked(c.edges().iter().map(|e| self.edges[e]).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct EdgeInvariant {
    is_loop: bool,
    class_size: usize,
    balanced_lengths: Vec<usize>,
}

struct Prepared {
    vertices: Vec<VertexId>,
    mult: Vec<Vec<usize>>,
    vertex_inv: Vec<(usize, Vec<EdgeInvariant>)>,
    edges: Vec<(EdgeId, usize, usize)>,
    edge_inv: BTreeMap<EdgeId, EdgeInvariant>,
    balanced: HashSet<Cycle>,
    cycles_through: BTreeMap<EdgeId, Vec<Cycle>>,
}

fn prepare(bg: &BiasedGraph) -> Prepared {
    let g = bg.graph();
    let vertices: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = vertices.len();
    let mut mult = vec![vec![0; n]; n];
    let mut edges = Vec::new();
    for (id, e) in g.edges() {
        let (i, j) = (index[&e.tail], index[&e.head]);
        mult[i][j] += 1;
        if i != j {
            mult[j][i] += 1;
        }
        edges.push((id, i.min(j), i.max(j)));
    }
    let mut cycles_through: BTreeMap<EdgeId, Vec<Cycle>> = BTreeMap::new();
    for c in bg.balanced() {
        for &e in c.edges() {
            cycles_through.entry(e).or_default().push(c.clone());
        }
    }
    let edge_inv: BTreeMap<EdgeId, EdgeInvariant> = edges
        .iter()
        .map(|&(id, i, j)| {
            let mut balanced_lengths: Vec<usize> = cycles_through
                .get(&id)
                .map(|cs| cs.iter().map(Cycle::len).collect())
                .unwrap_or_default();
            balanced_lengths.sort_unstable();
            let inv = EdgeInvariant {
                is_loop: i == j,
                class_size: mult[i][j],
                balanced_lengths,
            };
            (id, inv)
        })
        .collect();
    let mut vertex_inv = vec![(0, Vec::new()); n];
    for &(id, i, j) in &edges {
        vertex_inv[i].1.push(edge_inv[&id].clone());
        if i != j {
            vertex_inv[j].1.push(edge_inv[&id].clone());
        }
    }
    for (i, (deg, list)) in vertex_inv.iter_mut().enumerate() {
        *deg = g.degree(vertices[i]);
        list.sort();
    }
    Prepared {
        vertices,
        mult,
        vertex_inv,
        edges,
        edge_inv,
        balanced: bg.balanced().iter().cloned().collect(),
        cycles_through,
    }
}

/// Finds an isomorphism of biased graphs, or `None`.
pub fn isomorphic(a: &BiasedGraph, b: &BiasedGraph) -> Option<Isomorphism> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.balanced().len() != b.balanced().len()
    {
        return None;
    }
    let pa = prepare(a);
    let pb = prepare(b);
    let sorted = |p: &Prepared| {
        let mut v = p.vertex_inv.clone();
        v.sort();
        v
    };
    if sorted(&pa) != sorted(&pb) {
        return None;
    }
    let order = vertex_order(&pa);
    let mut search = VertexSearch {
        a: &pa,
        b: &pb,
        order,
        map: vec![usize::MAX; pa.vertices.len()],
        used: vec![false; pb.vertices.len()],
        found: None,
    };
    search.run(0);
    search.found
}

/// Breadth-first from the highest-degree vertex in each component, so that
/// most vertices are placed next to an already mapped neighbour.
fn vertex_order(p: &Prepared) -> Vec<usize> {
    let n = p.vertices.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&i| std::cmp::Reverse(p.vertex_inv[i].0));
    for root in by_degree {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for (j, &m) in p.mult[i].iter().enumerate() {
                if !seen[j] && m > 0 {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    order
}

struct VertexSearch<'a> {
    a: &'a Prepared,
    b: &'a Prepared,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    found: Option<Isomorphism>,
}

impl VertexSearch<'_> {
    fn run(&mut self, depth: usize) {
        if self.found.is_some() {
            return;
        }
        if depth == self.order.len() {
            self.found = self.edges();
            return;
        }
        let v = self.order[depth];
        for w in 0..self.b.vertices.len() {
            if self.used[w] || self.a.vertex_inv[v] != self.b.vertex_inv[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .chain(std::iter::once(&v))
                .all(|&u| {
                    let image = if u == v { w } else { self.map[u] };
                    self.a.mult[v][u] == self.b.mult[w][image]
                });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            self.run(depth + 1);
            self.used[w] = false;
            self.map[v] = usize::MAX;
            if self.found.is_some() {
                return;
            }
        }
    }

    /// Given a vertex bijection, match edges within parallel classes.
    fn edges(&self) -> Option<Isomorphism> {
        let mut classes_b: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
        for &(id, i, j) in &self.b.edges {
            classes_b.entry((i, j)).or_default().push(id);
        }
        // Edges of balanced cycles first, cycle by cycle, so cycles close early.
        let mut order: Vec<EdgeId> = Vec::new();
        let mut placed = BTreeSet::new();
        let mut cycles: Vec<&Cycle> = self.a.balanced.iter().collect();
        cycles.sort();
        for c in cycles {
            for &e in c.edges() {
                if placed.insert(e) {
                    order.push(e);
                }
            }
        }
        for &(id, _, _) in &self.a.edges {
            if placed.insert(id) {
                order.push(id);
            }
        }
        let ends_a: BTreeMap<EdgeId, (usize, usize)> = self
            .a
            .edges
            .iter()
            .map(|&(id, i, j)| (id, (i, j)))
            .collect();
        let mut search = EdgeSearch {
            vs: self,
            classes_b,
            ends_a,
            order,
            map: BTreeMap::new(),
            used: BTreeSet::new(),
        };
        if !search.run(0) {
            return None;
        }
        let vertices = (0..self.a.vertices.len())
            .map(|i| (self.a.vertices[i], self.b.vertices[self.map[i]]))
            .collect();
        Some(Isomorphism {
            vertices,
            edges: search.map,
        })
    }
}

struct EdgeSearch<'a, 'b> {
    vs: &'a VertexSearch<'b>,
    classes_b: BTreeMap<(usize, usize), Vec<EdgeId>>,
    ends_a: BTreeMap<EdgeId, (usize, usize)>,
    order: Vec<EdgeId>,
    map: BTreeMap<EdgeId, EdgeId>,
    used: BTreeSet<EdgeId>,
}

impl EdgeSearch<'_, '_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let e = self.order[depth];
        let (i, j) = self.ends_a[&e];
        let (x, y) = (self.vs.map[i], self.vs.map[j]);
        let key = (x.min(y), x.max(y));
        let candidates = self.classes_b.get(&key).cloned().unwrap_or_default();
        let inv = &self.vs.a.edge_inv[&e];
        for f in candidates {
            if self.used.contains(&f) || &self.vs.b.edge_inv[&f] != inv {
                continue;
            }
            self.map.insert(e, f);
            self.used.insert(f);
            if self.closed_cycles_ok(e) && self.run(depth + 1) {
                return true;
            }
            self.used.remove(&f);
            self.map.remove(&e);
        }
        false
    }

    fn closed_cycles_ok(&self, e: EdgeId) -> bool {
        let Some(cycles) = self.vs.a.cycles_through.get(&e) else {
            return true;
        };
        cycles.iter().all(|c| {
            let image: Option<Vec<EdgeId>> =
                c.edges().iter().map(|f| self.map.get(f).copied()).collect();
            match image {
                Some(edges) => self
                    .vs
                    .b
                    .balanced
                    .contains(&Cycle::from_edges_unchecked(edges)),
                None => true,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use proptest::prelude::*;

    fn doubled(n: u32, offset: u32) -> BiasedGraph {
        let mut g = Multigraph::with_vertices(n);
        for copy in 0..2 {
            for i in 0..n {
                g.add_edge(
                    EdgeId(offset + copy * n + i),
                    VertexId(i),
                    VertexId((i + 1) % n),
                )
                .unwrap();
            }
        }
        let first = Cycle::from_edges_unchecked((0..n).map(|i| EdgeId(offset + i)).collect());
        let second = Cycle::from_edges_unchecked((n..2 * n).map(|i| EdgeId(offset + i)).collect());
        BiasedGraph::new(g, [first, second]).unwrap()
    }

    /// Same graph as `bg` with vertex and edge ids permuted.
    fn relabel(bg: &BiasedGraph, vperm: &[u32], eperm: &[u32]) -> BiasedGraph {
        let g = bg.graph();
        let vs: Vec<VertexId> = g.vertices().collect();
        let es: Vec<EdgeId> = g.edge_ids().collect();
        let vmap: BTreeMap<VertexId, VertexId> = vs
            .iter()
            .zip(vperm)
            .map(|(&v, &p)| (v, VertexId(p)))
            .collect();
        let emap: BTreeMap<EdgeId, EdgeId> = es
            .iter()
            .zip(eperm)
            .map(|(&e, &p)| (e, EdgeId(p)))
            .collect();
        let mut h = Multigraph::new();
        for v in vmap.values() {
            h.add_vertex(*v);
        }
        for (id, e) in g.edges() {
            h.add_edge(emap[&id], vmap[&e.head], vmap[&e.tail]).unwrap();
        }
        let balanced = bg
            .balanced()
            .iter()
            .map(|c| Cycle::from_edges_unchecked(c.edges().iter().map(|e| emap[e]).collect()));
        BiasedGraph::new(h, balanced).unwrap()
    }

    #[test]
    fn relabelled_copies_are_isomorphic() {
        let a = doubled(4, 0);
        let b = doubled(4, 100);
        let iso = isomorphic(&a, &b).unwrap();
        assert!(iso.verify(&a, &b));
    }

    #[test]
    fn balanced_sets_distinguish() {
        let a = doubled(3, 0);
        let mut other = a.balanced().clone();
        other.pop_first();
        let b = BiasedGraph::new(a.graph().clone(), other).unwrap();
        assert!(isomorphic(&a, &b).is_none());
        // Same counts, different structure: a balanced triangle through both
        // copies of the doubled triangle.
        let mixed = [
            Cycle::from_edges_unchecked(vec![EdgeId(0), EdgeId(1), EdgeId(2)]),
            Cycle::from_edges_unchecked(vec![EdgeId(0), EdgeId(4), EdgeId(5)]),
        ];
        let c = BiasedGraph::new_unchecked(a.graph().clone(), mixed.into());
        if c.validate_theta().is_ok() {
            assert!(isomorphic(&a, &c).is_none());
        }
    }

    #[test]
    fn contrabalanced_parallel_classes() {
        let mut g = Multigraph::with_vertices(2);
        for i in 0..4 {
            g.add_edge(EdgeId(i), VertexId(0), VertexId(1)).unwrap();
        }
        let a = BiasedGraph::contrabalanced(g.clone());
        let b = BiasedGraph::contrabalanced(g.clone());
        assert!(isomorphic(&a, &b).unwrap().verify(&a, &b));
        let c =
            BiasedGraph::new(g, [Cycle::from_edges_unchecked(vec![EdgeId(0), EdgeId(1)])]).unwrap();
        assert!(isomorphic(&a, &c).is_none());
    }

    fn permutation(n: usize) -> impl Strategy<Value = Vec<u32>> {
        Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn isomorphism_survives_relabelling(
            n in 3u32..6,
            vperm in permutation(5),
            eperm in permutation(10),
        ) {
            let a = doubled(n, 0);
            let vp: Vec<u32> = vperm.into_iter().filter(|&x| x < n).collect();
            let ep: Vec<u32> = eperm.into_iter().filter(|&x| x < 2 * n).collect();
            let b = relabel(&a, &vp, &ep);
            let iso = isomorphic(&a, &b);
            prop_assert!(iso.is_some());
            prop_assert!(iso.unwrap().verify(&a, &b));
            let back = isomorphic(&b, &a);
            prop_assert!(back.is_some());
        }
    }
}
