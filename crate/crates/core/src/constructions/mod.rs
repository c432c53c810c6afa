//! Coloured plane graphs and the biased graphs obtained by identifying each
//! colour class to a single vertex.

mod builder;
mod coloured;
mod cycle;
mod families;

use std::collections::{BTreeMap, BTreeSet};

pub use coloured::{build_coloured_planar, choose_sequence, Parity};
pub use cycle::build_cycle_construction;
pub use families::{build_f, build_h};

use crate::bias::BiasedGraph;
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_cycles, is_subdivision_of_3connected, Cycle, EdgeId, Multigraph, PlaneGraph, VertexId,
};

/// A plane graph with a vertex colouring. Colours are indices into
/// `palette`, whose length is the number of colours `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredPlaneGraph {
    plane: PlaneGraph,
    colour: BTreeMap<VertexId, usize>,
    palette: Vec<String>,
}

/// Outcome of checking the four properties individually.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyReport {
    pub subdivision_of_3connected: bool,
    pub rainbow_faces: bool,
    pub short_cycles_are_faces: bool,
    pub pair_multiplicity: Option<bool>,
}

impl PropertyReport {
    pub fn all(&self) -> bool {
        self.subdivision_of_3connected
            && self.rainbow_faces
            && self.short_cycles_are_faces
            && self.pair_multiplicity.unwrap_or(true)
    }
}

impl ColouredPlaneGraph {
    pub fn new(
        plane: PlaneGraph,
        colour: BTreeMap<VertexId, usize>,
        palette: Vec<String>,
    ) -> Result<Self> {
        for v in plane.graph().vertices() {
            match colour.get(&v) {
                Some(&c) if c < palette.len() => {}
                Some(&c) => {
                    return Err(Error::InvalidConstructionInput(format!(
                        "vertex {v} has colour {c} outside the palette"
                    )))
                }
                None => {
                    return Err(Error::InvalidConstructionInput(format!(
                        "vertex {v} has no colour"
                    )))
                }
            }
        }
        if colour.keys().any(|v| !plane.graph().contains_vertex(*v)) {
            return Err(Error::InvalidConstructionInput(
                "colour given for unknown vertex".into(),
            ));
        }
        Ok(ColouredPlaneGraph {
            plane,
            colour,
            palette,
        })
    }

    pub fn plane(&self) -> &PlaneGraph {
        &self.plane
    }

    pub fn graph(&self) -> &Multigraph {
        self.plane.graph()
    }

    pub fn colour(&self, v: VertexId) -> usize {
        self.colour[&v]
    }

    pub fn colours(&self) -> &BTreeMap<VertexId, usize> {
        &self.colour
    }

    pub fn palette(&self) -> &[String] {
        &self.palette
    }

    pub fn t(&self) -> usize {
        self.palette.len()
    }

    pub fn check_subdivision_of_3connected(&self) -> bool {
        is_subdivision_of_3connected(self.graph())
    }

    /// Every colour exactly once on every face.
    pub fn check_rainbow_faces(&self) -> bool {
        let t = self.t();
        self.plane.faces().iter().all(|f| {
            let vs = f.vertices(self.graph());
            let colours: BTreeSet<usize> = vs.iter().map(|v| self.colour[v]).collect();
            vs.len() == t && colours.len() == t
        })
    }

    /// Every cycle of length at most `t` bounds a face.
    pub fn check_short_cycles_are_faces(&self) -> Result<bool> {
        let faces: BTreeSet<Vec<EdgeId>> =
            self.plane.faces().iter().map(|f| f.edge_set()).collect();
        Ok(enumerate_cycles(self.graph(), Some(self.t()))?
            .iter()
            .all(|c| faces.contains(c.edges())))
    }

    /// Number of edges joining each pair of distinct colours, keyed with the
    /// smaller colour first.
    pub fn pair_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut counts = BTreeMap::new();
        let t = self.t();
        for a in 0..t {
            for b in a + 1..t {
                counts.insert((a, b), 0);
            }
        }
        for (_, e) in self.graph().edges() {
            let (x, y) = (self.colour[&e.tail], self.colour[&e.head]);
            if x != y {
                *counts.entry((x.min(y), x.max(y))).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn check_pair_multiplicity(&self, ell: usize) -> bool {
        self.pair_counts().values().all(|&n| n >= ell)
    }

    pub fn check_properties(&self, ell: Option<usize>) -> Result<PropertyReport> {
        Ok(PropertyReport {
            subdivision_of_3connected: self.check_subdivision_of_3connected(),
            rainbow_faces: self.check_rainbow_faces(),
            short_cycles_are_faces: self.check_short_cycles_are_faces()?,
            pair_multiplicity: ell.map(|l| self.check_pair_multiplicity(l)),
        })
    }

    fn require_construction_properties(&self) -> Result<()> {
        let r = self.check_properties(None)?;
        let mut failed = Vec::new();
        if !r.subdivision_of_3connected {
            failed.push("not a subdivision of a 3-connected graph");
        }
        if !r.rainbow_faces {
            failed.push("some face does not see every colour exactly once");
        }
        if !r.short_cycles_are_faces {
            failed.push("some short cycle is not a face");
        }
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Error::ConstructionProperties(failed.join("; ")))
        }
    }

    /// The graph on the colours, with edge ids and orientations kept.
    pub fn identified_graph(&self) -> Multigraph {
        let mut g = Multigraph::with_vertices(self.t() as u32);
        for (id, e) in self.graph().edges() {
            let tail = VertexId(self.colour[&e.tail] as u32);
            let head = VertexId(self.colour[&e.head] as u32);
            g.add_edge(id, tail, head).expect("fresh edge id");
        }
        g
    }

    fn face_cycles(&self, faces: impl Iterator<Item = usize>) -> Vec<Cycle> {
        faces
            .map(|f| Cycle::from_edges_unchecked(self.plane.faces()[f].edge_set()))
            .collect()
    }
}

/// Identifies colour classes; the balanced cycles are the boundaries of the
/// finite faces.
pub fn identify(p: &ColouredPlaneGraph) -> Result<BiasedGraph> {
    p.require_construction_properties()?;
    BiasedGraph::new(p.identified_graph(), p.face_cycles(p.plane.finite_faces()))
}

/// As [`identify`], but with every face balanced, the infinite one included.
pub fn identify_all_faces(p: &ColouredPlaneGraph) -> Result<BiasedGraph> {
    p.require_construction_properties()?;
    BiasedGraph::new(
        p.identified_graph(),
        p.face_cycles(0..p.plane.faces().len()),
    )
}

/// The doubled `n`-cycle: edge `i` joins `i` to `i + 1` and edge `n + i` is
/// parallel to it. The balanced cycles are edges `0..n` and edges `n..2n`.
pub fn build_2cn(n: usize) -> Result<BiasedGraph> {
    if n < 2 {
        return Err(Error::UnsupportedParameters(format!(
            "2C_n needs n >= 2, got {n}"
        )));
    }
    let n32 = n as u32;
    let mut g = Multigraph::with_vertices(n32);
    for copy in 0..2 {
        for i in 0..n32 {
            g.add_edge(EdgeId(copy * n32 + i), VertexId(i), VertexId((i + 1) % n32))?;
        }
    }
    let first = Cycle::from_edges_unchecked((0..n32).map(EdgeId).collect());
    let second = Cycle::from_edges_unchecked((n32..2 * n32).map(EdgeId).collect());
    BiasedGraph::new(g, [first, second])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_identifies_to_three_vertices() {
        let f = build_f(2).unwrap();
        assert!(f.check_properties(Some(4)).unwrap().all());
        let bg = identify(&f).unwrap();
        assert_eq!(bg.vertex_count(), 3);
        assert_eq!(bg.edge_count(), 12);
        assert_eq!(bg.balanced().len(), 7);
        for c in bg.balanced() {
            assert_eq!(c.vertices(bg.graph()).len(), 3);
        }
        assert_eq!(identify_all_faces(&f).unwrap().balanced().len(), 8);
    }

    #[test]
    fn h_has_the_four_properties() {
        for (k, ell) in [(2, 8), (3, 12)] {
            let h = build_h(k).unwrap();
            let r = h.check_properties(Some(ell)).unwrap();
            assert!(r.all(), "k={k}: {r:?}");
        }
        let h1 = build_h(1).unwrap();
        assert!(h1.check_rainbow_faces());
    }

    #[test]
    fn broken_colouring_is_refused() {
        let f = build_f(2).unwrap();
        let mut colour = f.colours().clone();
        colour.insert(VertexId(0), 1);
        let bad = ColouredPlaneGraph::new(f.plane().clone(), colour, f.palette().to_vec()).unwrap();
        assert!(!bad.check_rainbow_faces());
        assert!(matches!(
            identify(&bad),
            Err(Error::ConstructionProperties(_))
        ));
    }

    #[test]
    fn doubled_cycles() {
        for n in 2..7 {
            let bg = build_2cn(n).unwrap();
            assert_eq!(bg.vertex_count(), n);
            assert_eq!(bg.edge_count(), 2 * n);
            let b: Vec<&Cycle> = bg.balanced().iter().collect();
            assert_eq!(b.len(), 2);
            assert!(b[0].intersection(b[1]).is_empty());
            assert!(bg.validate_theta().is_ok());
        }
        assert!(build_2cn(1).is_err());
    }
}
