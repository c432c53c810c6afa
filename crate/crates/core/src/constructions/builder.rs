use std::collections::BTreeMap;

use super::ColouredPlaneGraph;
use crate::error::Result;
use crate::graph::{EdgeId, Multigraph, PlaneGraph, VertexId};

/// Mutable plane graph with colours, used while a family member is built.
/// Vertex and edge ids are positions in the vectors.
#[derive(Debug, Clone, Default)]
pub(crate) struct Builder {
    pub colours: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub rotation: Vec<Vec<usize>>,
}

impl Builder {
    pub fn vertex(&mut self, colour: usize) -> usize {
        self.colours.push(colour);
        self.rotation.push(Vec::new());
        self.colours.len() - 1
    }

    /// Adds an edge without touching rotations; callers fill them in.
    pub fn edge(&mut self, tail: usize, head: usize) -> usize {
        self.edges.push((tail, head));
        self.edges.len() - 1
    }

    /// Replaces edge `e = (u, v)` by a path through new vertices with the
    /// given colours, listed from `u` towards `v`. Edge `e` keeps its id as
    /// the first edge of the path.
    pub fn subdivide(&mut self, e: usize, colours: &[usize]) {
        if colours.is_empty() {
            return;
        }
        let v = self.edges[e].1;
        let mut prev_edge = e;
        for &c in colours {
            let w = self.vertex(c);
            self.edges[prev_edge].1 = w;
            let next_edge = self.edges.len();
            self.edges.push((w, usize::MAX));
            self.rotation[w] = vec![prev_edge, next_edge];
            prev_edge = next_edge;
        }
        self.edges[prev_edge].1 = v;
        for slot in self.rotation[v].iter_mut() {
            if *slot == e {
                *slot = prev_edge;
            }
        }
    }

    /// The infinite face is the lowest-indexed face through `outer_vertex`.
    pub fn finish(self, palette: Vec<String>, outer_vertex: usize) -> Result<ColouredPlaneGraph> {
        let mut graph = Multigraph::new();
        for v in 0..self.colours.len() {
            graph.add_vertex(VertexId(v as u32));
        }
        for (id, &(t, h)) in self.edges.iter().enumerate() {
            graph.add_edge(EdgeId(id as u32), VertexId(t as u32), VertexId(h as u32))?;
        }
        let rotation: BTreeMap<VertexId, Vec<EdgeId>> = self
            .rotation
            .iter()
            .enumerate()
            .map(|(v, es)| {
                (
                    VertexId(v as u32),
                    es.iter().map(|&e| EdgeId(e as u32)).collect(),
                )
            })
            .collect();
        let plane = PlaneGraph::new(graph, rotation, 0)?;
        let outer = plane
            .lowest_face_at(VertexId(outer_vertex as u32))
            .expect("vertex lies on a face");
        let plane = plane.with_outer(outer)?;
        let colour = self
            .colours
            .iter()
            .enumerate()
            .map(|(v, &c)| (VertexId(v as u32), c))
            .collect();
        ColouredPlaneGraph::new(plane, colour, palette)
    }
}
