use std::collections::BTreeMap;

use super::{ClosedWalk, EdgeId, Multigraph, Step, VertexId};
use crate::error::{Error, Result};

/// A simple connected graph embedded in the plane by a rotation system, with
/// one face designated as the infinite face.
///
/// Faces are traced by leaving each vertex along the successor (in rotation
/// order) of the edge used to arrive. Each face is stored as its least
/// rotation, and faces are indexed in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Multigraph,
    rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    outer: usize,
    faces: Vec<ClosedWalk>,
    dart_face: BTreeMap<Step, usize>,
}

impl PlaneGraph {
    pub fn new(
        graph: Multigraph,
        rotation: BTreeMap<VertexId, Vec<EdgeId>>,
        outer: usize,
    ) -> Result<Self> {
        if !graph.is_simple() {
            return Err(Error::InvalidEmbedding(
                "underlying graph is not simple".into(),
            ));
        }
        if !graph.is_connected() {
            return Err(Error::InvalidEmbedding(
                "underlying graph is disconnected".into(),
            ));
        }
        let inc = graph.incidence();
        for (v, around) in &inc {
            let mut expected: Vec<EdgeId> = around.iter().map(|&(id, _)| id).collect();
            let mut given = rotation.get(v).cloned().unwrap_or_default();
            expected.sort_unstable();
            given.sort_unstable();
            if expected != given {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at vertex {v} does not list its incident edges"
                )));
            }
        }
        if rotation.keys().any(|v| !graph.contains_vertex(*v)) {
            return Err(Error::InvalidEmbedding(
                "rotation for unknown vertex".into(),
            ));
        }
        let (faces, dart_face) = trace_faces(&graph, &rotation);
        let euler = graph.vertex_count() as i64 - graph.edge_count() as i64 + faces.len() as i64;
        if graph.edge_count() > 0 && euler != 2 {
            return Err(Error::InvalidEmbedding(format!(
                "V - E + F = {euler}, expected 2"
            )));
        }
        if outer >= faces.len() {
            return Err(Error::InvalidEmbedding(format!(
                "outer face {outer} out of range ({} faces)",
                faces.len()
            )));
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            outer,
            faces,
            dart_face,
        })
    }

    /// Same embedding with a different infinite face.
    pub fn with_outer(&self, outer: usize) -> Result<Self> {
        Self::new(self.graph.clone(), self.rotation.clone(), outer)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self) -> &BTreeMap<VertexId, Vec<EdgeId>> {
        &self.rotation
    }

    pub fn faces(&self) -> &[ClosedWalk] {
        &self.faces
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn outer_face(&self) -> &ClosedWalk {
        &self.faces[self.outer]
    }

    /// Indices of the finite faces.
    pub fn finite_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&f| f != self.outer)
    }

    /// The face containing a given side of an edge.
    pub fn face_of(&self, dart: Step) -> Option<usize> {
        self.dart_face.get(&dart).copied()
    }

    /// The two faces on either side of `e` (forward side first).
    pub fn faces_at(&self, e: EdgeId) -> Option<(usize, usize)> {
        Some((
            self.face_of(Step::new(e, true))?,
            self.face_of(Step::new(e, false))?,
        ))
    }

    /// Index of the lowest face whose boundary passes through `v`.
    pub fn lowest_face_at(&self, v: VertexId) -> Option<usize> {
        self.faces
            .iter()
            .position(|f| f.vertices(&self.graph).contains(&v))
    }
}

fn trace_faces(
    graph: &Multigraph,
    rotation: &BTreeMap<VertexId, Vec<EdgeId>>,
) -> (Vec<ClosedWalk>, BTreeMap<Step, usize>) {
    let mut seen: BTreeMap<Step, usize> = BTreeMap::new();
    let mut raw: Vec<ClosedWalk> = Vec::new();
    for (id, _) in graph.edges() {
        for forward in [true, false] {
            let start = Step::new(id, forward);
            if seen.contains_key(&start) {
                continue;
            }
            let mut steps = Vec::new();
            let mut dart = start;
            loop {
                seen.insert(dart, raw.len());
                steps.push(dart);
                let at = dart.end(graph).expect("edge in graph");
                let around = &rotation[&at];
                let pos = around
                    .iter()
                    .position(|&e| e == dart.edge)
                    .expect("rotation entry");
                let next = around[(pos + 1) % around.len()];
                let e = graph.edge(next).expect("edge in graph");
                dart = Step::new(next, e.tail == at);
                if dart == start {
                    break;
                }
            }
            raw.push(ClosedWalk::from_steps_unchecked(steps).least_rotation());
        }
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| raw[a].cmp(&raw[b]));
    let mut rank = vec![0; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let faces = order.iter().map(|&i| raw[i].clone()).collect();
    let dart_face = seen.into_iter().map(|(d, f)| (d, rank[f])).collect();
    (faces, dart_face)
}
