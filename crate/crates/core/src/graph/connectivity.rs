use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Multigraph, VertexId};

/// Repeatedly replaces a degree-2 vertex and its two edges by a single edge
/// between its neighbours. A vertex carrying only a loop is left alone.
pub fn suppress_degree_two(graph: &Multigraph) -> Multigraph {
    let mut g = graph.clone();
    loop {
        let candidate = g
            .vertices()
            .find(|&v| g.degree(v) == 2 && g.edges().all(|(_, e)| !(e.is_loop() && e.tail == v)));
        let Some(v) = candidate else {
            return g;
        };
        let incident: Vec<_> = g
            .edges()
            .filter(|(_, e)| e.tail == v || e.head == v)
            .collect();
        let (first, e1) = incident[0];
        let (second, e2) = incident[1];
        let a = e1.other(v);
        let b = e2.other(v);
        g.remove_edge(first).expect("incident edge");
        g.remove_edge(second).expect("incident edge");
        g.add_edge(first, a, b).expect("fresh id");
        let mut rebuilt = Multigraph::new();
        for w in g.vertices().filter(|&w| w != v) {
            rebuilt.add_vertex(w);
        }
        for (id, e) in g.edges() {
            rebuilt
                .add_edge(id, e.tail, e.head)
                .expect("endpoints kept");
        }
        g = rebuilt;
    }
}

/// True when the graph has at least four vertices and stays connected after
/// removing any one or two vertices. Found by exhaustive cut search.
pub fn is_3connected(graph: &Multigraph) -> bool {
    let vertices: Vec<VertexId> = graph.vertices().collect();
    if vertices.len() < 4 {
        return false;
    }
    let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> =
        vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
    for (_, e) in graph.edges() {
        if !e.is_loop() {
            adj.get_mut(&e.tail).unwrap().insert(e.head);
            adj.get_mut(&e.head).unwrap().insert(e.tail);
        }
    }
    let connected_without = |removed: &[VertexId]| {
        let Some(&start) = vertices.iter().find(|v| !removed.contains(v)) else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if !removed.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() + removed.len() == vertices.len()
    };
    if !connected_without(&[]) {
        return false;
    }
    for (i, &x) in vertices.iter().enumerate() {
        if !connected_without(&[x]) {
            return false;
        }
        for &y in &vertices[i + 1..] {
            if !connected_without(&[x, y]) {
                return false;
            }
        }
    }
    true
}

/// Whether suppressing all degree-2 vertices leaves a 3-connected graph.
pub fn is_subdivision_of_3connected(graph: &Multigraph) -> bool {
    is_3connected(&suppress_degree_two(graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    fn k4() -> Multigraph {
        let mut g = Multigraph::with_vertices(4);
        for u in 0..4 {
            for v in u + 1..4 {
                g.push_edge(VertexId(u), VertexId(v)).unwrap();
            }
        }
        g
    }

    fn subdivide_all(g: &Multigraph) -> Multigraph {
        let mut out = Multigraph::new();
        for v in g.vertices() {
            out.add_vertex(v);
        }
        let first = g.vertices().map(|v| v.0).max().unwrap() + 1;
        for (k, (_, e)) in (0u32..).zip(g.edges()) {
            let mid = VertexId(first + k);
            out.add_vertex(mid);
            out.add_edge(EdgeId(2 * k), e.tail, mid).unwrap();
            out.add_edge(EdgeId(2 * k + 1), mid, e.head).unwrap();
        }
        out
    }

    #[test]
    fn k4_and_its_subdivision() {
        assert!(is_subdivision_of_3connected(&k4()));
        let sub = subdivide_all(&k4());
        assert_eq!(sub.vertex_count(), 10);
        assert!(!is_3connected(&sub));
        assert!(is_subdivision_of_3connected(&sub));
        assert!(is_subdivision_of_3connected(&subdivide_all(&sub)));
    }

    #[test]
    fn cycles_and_thetas_are_not() {
        let mut c = Multigraph::with_vertices(5);
        for i in 0..5 {
            c.push_edge(VertexId(i), VertexId((i + 1) % 5)).unwrap();
        }
        assert!(!is_subdivision_of_3connected(&c));
        let mut theta = Multigraph::with_vertices(2);
        for _ in 0..3 {
            theta.push_edge(VertexId(0), VertexId(1)).unwrap();
        }
        assert!(!is_subdivision_of_3connected(&subdivide_all(&theta)));
    }

    #[test]
    fn a_two_cut_is_found() {
        // Two K4s glued along an edge have a 2-vertex cut.
        let mut g = k4();
        for v in 4..6 {
            g.add_vertex(VertexId(v));
        }
        for (u, v) in [(2, 4), (3, 4), (2, 5), (3, 5), (4, 5)] {
            g.push_edge(VertexId(u), VertexId(v)).unwrap();
        }
        assert!(!is_3connected(&g));
    }
}
