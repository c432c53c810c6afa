use super::{matroid_isomorphic, matroid_of, CircuitMatroid, MatroidKind, MAX_GROUND};
use crate::bias::BiasedGraph;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// `U_{r,n}` on the given ground set: every `(r + 1)`-subset is a circuit.
pub fn uniform_matroid(r: usize, ground: Vec<EdgeId>) -> Result<CircuitMatroid> {
    let mut ground = ground;
    ground.sort_unstable();
    ground.dedup();
    let n = ground.len();
    if n > MAX_GROUND {
        return Err(Error::ResourceLimit {
            what: "ground set elements",
            limit: MAX_GROUND,
        });
    }
    let mut masks = Vec::new();
    let mut pick: Vec<usize> = (0..=r).collect();
    if r < n {
        loop {
            masks.push(pick.iter().fold(0u128, |m, &i| m | 1 << i));
            // Next combination in lexicographic order.
            let Some(k) = (0..=r).rev().find(|&k| pick[k] < n - (r + 1 - k)) else {
                break;
            };
            pick[k] += 1;
            for j in k + 1..=r {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Ok(CircuitMatroid::from_masks(ground, masks))
}

fn two_vertex(parallel: u32, loops_at: &[u32]) -> BiasedGraph {
    let mut g = Multigraph::with_vertices(2);
    for _ in 0..parallel {
        g.push_edge(VertexId(0), VertexId(1))
            .expect("vertices exist");
    }
    for &v in loops_at {
        g.push_edge(VertexId(v), VertexId(v))
            .expect("vertex exists");
    }
    BiasedGraph::contrabalanced(g)
}

/// The biased graphs, up to isomorphism, whose matroid of the given kind is
/// `U_{2,m}`: `m` parallel edges, `m - 1` with a loop, and for frame
/// matroids `m - 2` with a loop at each end, all with no balanced cycles.
/// Each is checked against `U_{2,m}` before being returned.
pub fn u2m_representations(m: usize, kind: MatroidKind) -> Result<Vec<BiasedGraph>> {
    if m < 4 {
        return Err(Error::UnsupportedParameters(format!(
            "U_(2,m) representations need m >= 4, got {m}"
        )));
    }
    let m32 = m as u32;
    let mut out = vec![two_vertex(m32, &[]), two_vertex(m32 - 1, &[0])];
    if kind == MatroidKind::Frame {
        out.push(two_vertex(m32 - 2, &[0, 1]));
    }
    let u = uniform_matroid(2, (0..m32).map(EdgeId).collect())?;
    for bg in &out {
        if matroid_isomorphic(&matroid_of(bg, kind)?, &u)?.is_none() {
            return Err(Error::ConstructionProperties(format!(
                "{kind} matroid of a listed representation is not U_(2,{m})"
            )));
        }
    }
    Ok(out)
}

/// Loopless, at least three vertices, every pair of vertices joined by at
/// least four edges, and every cycle of length two unbalanced.
pub fn uniqueness_hypotheses(bg: &BiasedGraph) -> bool {
    let g = bg.graph();
    if g.edges().any(|(_, e)| e.is_loop()) || g.vertex_count() < 3 {
        return false;
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.multiplicity(u, v) < 4 {
                return false;
            }
        }
    }
    bg.balanced().iter().all(|c| c.len() != 2)
}
