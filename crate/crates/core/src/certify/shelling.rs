use std::collections::{BTreeSet, HashSet};

use super::{apply_rerouting, ReroutingCertificate, ReroutingStep};
use crate::constructions::{identify, ColouredPlaneGraph};
use crate::error::{Error, Result};
use crate::graph::{ClosedWalk, Cycle, PlaneGraph, Step, VertexId};

/// A certificate for the biased graph obtained by identifying colour classes
/// of `p`, read off a shelling of the finite faces.
///
/// The walk starts around the infinite face. Each step removes one finite
/// face meeting the current boundary in a single path, lowest index first,
/// backtracking when stuck. When one face remains the walk goes around it.
pub fn shelling_certificate(p: &ColouredPlaneGraph) -> Result<ReroutingCertificate> {
    let bg = identify(p)?;
    let plane = p.plane();
    let mut region: BTreeSet<usize> = plane.finite_faces().collect();
    let start: Vec<Step> = plane.outer_face().steps().to_vec();
    let mut order = Vec::new();
    let mut failed = HashSet::new();
    if !shell(plane, &mut region, start.clone(), &mut order, &mut failed) {
        return Err(Error::NoShelling);
    }
    let host = bg.graph();
    let mut walks = vec![ClosedWalk::new(host, start)?];
    let mut steps = Vec::with_capacity(order.len());
    for (face, at, len) in order {
        let step = ReroutingStep {
            cycle: Cycle::from_edges_unchecked(plane.faces()[face].edge_set()),
            start: at,
            len,
        };
        let next = apply_rerouting(host, walks.last().expect("non-empty"), &step)?;
        walks.push(next);
        steps.push(step);
    }
    Ok(ReroutingCertificate { walks, steps })
}

/// Where `face` meets the boundary walk, as `(start, len)`, if it meets it
/// in one path and touches no other boundary vertex.
fn contact(plane: &PlaneGraph, walk: &[Step], face: usize) -> Option<(usize, usize)> {
    let n = walk.len();
    let hits: Vec<bool> = walk
        .iter()
        .map(|s| plane.face_of(s.reversed()) == Some(face))
        .collect();
    let len = hits.iter().filter(|&&h| h).count();
    if len == 0 || len == n {
        return None;
    }
    let start = (0..n).find(|&i| hits[i] && !hits[(i + n - 1) % n])?;
    if (0..len).any(|j| !hits[(start + j) % n]) {
        return None;
    }
    let g = plane.graph();
    let on_path: BTreeSet<VertexId> = (0..=len)
        .map(|j| walk[(start + j) % n].start(g).expect("walk in graph"))
        .collect();
    let boundary: BTreeSet<VertexId> = walk.iter().filter_map(|s| s.start(g)).collect();
    let face_vertices: BTreeSet<VertexId> = plane.faces()[face].vertices(g).into_iter().collect();
    let touching: BTreeSet<VertexId> = face_vertices.intersection(&boundary).copied().collect();
    (touching == on_path).then_some((start, len))
}

fn shell(
    plane: &PlaneGraph,
    region: &mut BTreeSet<usize>,
    walk: Vec<Step>,
    order: &mut Vec<(usize, usize, usize)>,
    failed: &mut HashSet<Vec<usize>>,
) -> bool {
    if region.len() <= 1 {
        return true;
    }
    let key: Vec<usize> = region.iter().copied().collect();
    if failed.contains(&key) {
        return false;
    }
    for face in key.clone() {
        let Some((at, len)) = contact(plane, &walk, face) else {
            continue;
        };
        let g = plane.graph();
        let cycle = Cycle::from_edges_unchecked(plane.faces()[face].edge_set());
        let step = ReroutingStep {
            cycle,
            start: at,
            len,
        };
        let current = ClosedWalk::from_steps_unchecked(walk.clone());
        let Ok(next) = apply_rerouting(g, &current, &step) else {
            continue;
        };
        region.remove(&face);
        order.push((face, at, len));
        if shell(plane, region, next.steps().to_vec(), order, failed) {
            return true;
        }
        order.pop();
        region.insert(face);
    }
    failed.insert(key);
    false
}
