use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{FreeWord, GroupLabelling, Letter};
use crate::bias::{BiasedGraph, MinorOp};
use crate::constructions::{build_2cn, identify, identify_all_faces, ColouredPlaneGraph};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, PlaneGraph, Step, VertexId};

/// Labels the doubled `n`-cycle so that exactly its two designated cycles are
/// balanced: the first copy is trivial, and the second reads
/// `g_1, .., g_{n-1}` followed by `g_{n-1}^-1 .. g_1^-1`.
pub fn label_2cn(n: usize) -> Result<GroupLabelling> {
    let bg = build_2cn(n)?;
    let n32 = n as u32;
    let mut values = BTreeMap::new();
    for i in 0..n32 {
        values.insert(EdgeId(i), FreeWord::identity());
    }
    for i in 1..n32 {
        values.insert(EdgeId(n32 + i - 1), FreeWord::generator(i));
    }
    let closing = FreeWord::reduce((1..n32).rev().map(|i| Letter::new(i, true)));
    values.insert(EdgeId(2 * n32 - 1), closing);
    GroupLabelling::new(bg.graph().clone(), values)
}

fn vertex_index(vertices: impl Iterator<Item = VertexId>) -> BTreeMap<VertexId, u32> {
    vertices.enumerate().map(|(i, v)| (v, i as u32)).collect()
}

fn require_edge(p: &ColouredPlaneGraph, e: EdgeId) -> Result<()> {
    if p.graph().contains_edge(e) {
        Ok(())
    } else {
        Err(Error::InvalidConstructionInput(format!(
            "edge {e} is not in the coloured graph"
        )))
    }
}

/// Labelling of the identified graph with `e` contracted. `H` is the union of
/// the finite faces through `e`; the vertices of `H/e` get `g_0..g_n` and
/// each edge of `H/e` from `v_i` to `v_j` gets `g_i^-1 g_j`, while the edges
/// outside `H`, in id order, get the fresh generators `g_{n+1}, ..`.
pub fn label_contraction(p: &ColouredPlaneGraph, e: EdgeId) -> Result<GroupLabelling> {
    require_edge(p, e)?;
    let host = identify(p)?.contract_edge(e)?.graph().clone();
    let plane = p.plane();
    let g = plane.graph();
    let (f1, f2) = plane.faces_at(e).expect("edge has two sides");
    let mut h_edges = BTreeSet::new();
    for f in [f1, f2] {
        if f != plane.outer() {
            h_edges.extend(plane.faces()[f].edge_set());
        }
    }
    let edge = g.edge(e).expect("checked above");
    let (keep, drop) = edge.ends();
    let merged = |v: VertexId| if v == drop { keep } else { v };
    let h_vertices: BTreeSet<VertexId> = h_edges
        .iter()
        .flat_map(|&f| {
            let ed = g.edge(f).expect("face edge");
            [merged(ed.tail), merged(ed.head)]
        })
        .collect();
    let index = vertex_index(h_vertices.iter().copied());
    let n = index.len() as u32;
    let mut values = BTreeMap::new();
    let mut next = n;
    for (id, ed) in g.edges() {
        if id == e {
            continue;
        }
        let w = if h_edges.contains(&id) {
            FreeWord::quotient(index[&merged(ed.tail)], index[&merged(ed.head)])
        } else {
            let w = FreeWord::generator(next);
            next += 1;
            w
        };
        values.insert(id, w);
    }
    GroupLabelling::new(host, values)
}

/// Labelling of the identified graph with `e` deleted.
///
/// When `e` lies on the infinite face, vertex `v_i` of the coloured graph
/// gets `g_i` and every edge from `v_i` to `v_j` gets `g_i^-1 g_j`.
/// Otherwise `g_0` is reserved: vertex `v_i` gets `g_{i+1}`, a shortest path
/// in the dual of the graph without `e` runs from the infinite face to the
/// face `R` left by deleting `e`, and each edge crossing that path gets
/// `g_0` or `g_0^-1` inserted according to its direction of crossing. A
/// closed walk then evaluates to `g_0` raised to its winding number about
/// `R`.
pub fn label_deletion(p: &ColouredPlaneGraph, e: EdgeId) -> Result<GroupLabelling> {
    require_edge(p, e)?;
    let host = identify(p)?.delete_edge(e)?.graph().clone();
    let plane = p.plane();
    let g = plane.graph();
    let index = vertex_index(g.vertices());
    let (f1, f2) = plane.faces_at(e).expect("edge has two sides");
    if f1 == plane.outer() || f2 == plane.outer() {
        let values = g
            .edges()
            .filter(|&(id, _)| id != e)
            .map(|(id, ed)| (id, FreeWord::quotient(index[&ed.tail], index[&ed.head])))
            .collect();
        return GroupLabelling::new(host, values);
    }

    let crossings = dual_path_crossings(plane, e)?;
    let mut values = BTreeMap::new();
    for (id, ed) in g.edges() {
        if id == e {
            continue;
        }
        let (i, j) = (index[&ed.tail] + 1, index[&ed.head] + 1);
        let w = match crossings.get(&id) {
            Some(&forward_on_earlier) => FreeWord::reduce([
                Letter::new(i, true),
                Letter::new(0, !forward_on_earlier),
                Letter::new(j, false),
            ]),
            None => FreeWord::quotient(i, j),
        };
        values.insert(id, w);
    }
    GroupLabelling::new(host, values)
}

/// The edges crossed by a shortest dual path from the infinite face to the
/// face left by deleting `e`, each flagged with whether its forward side lies
/// on the earlier face of the path. Ties go to lower face and edge ids.
fn dual_path_crossings(plane: &PlaneGraph, e: EdgeId) -> Result<BTreeMap<EdgeId, bool>> {
    let mut graph = plane.graph().clone();
    graph.remove_edge(e)?;
    let rotation = plane
        .rotation()
        .iter()
        .map(|(&v, es)| (v, es.iter().copied().filter(|&f| f != e).collect()))
        .collect();
    let reduced = PlaneGraph::new(graph, rotation, 0)?;
    let outer_dart = plane.outer_face().steps()[0];
    let outer = reduced.face_of(outer_dart).expect("dart survives");
    let side = plane.face_of(Step::new(e, true)).expect("dart exists");
    let r_dart = plane.faces()[side]
        .steps()
        .iter()
        .copied()
        .find(|s| s.edge != e)
        .expect("face has other edges");
    let target = reduced.face_of(r_dart).expect("dart survives");
    let reduced = reduced.with_outer(outer)?;

    let mut parent: BTreeMap<usize, (usize, EdgeId)> = BTreeMap::new();
    let mut seen = BTreeSet::from([outer]);
    let mut queue = VecDeque::from([outer]);
    let mut by_face: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
    for id in reduced.graph().edge_ids() {
        let (a, b) = reduced.faces_at(id).expect("edge has two sides");
        if a != b {
            by_face.entry(a).or_default().push(id);
            by_face.entry(b).or_default().push(id);
        }
    }
    while let Some(f) = queue.pop_front() {
        if f == target {
            break;
        }
        for &id in by_face.get(&f).map(Vec::as_slice).unwrap_or(&[]) {
            let (a, b) = reduced.faces_at(id).expect("edge has two sides");
            let other = if a == f { b } else { a };
            if seen.insert(other) {
                parent.insert(other, (f, id));
                queue.push_back(other);
            }
        }
    }
    if !seen.contains(&target) {
        return Err(Error::InvalidConstructionInput(
            "dual graph is disconnected".into(),
        ));
    }
    let mut crossings = BTreeMap::new();
    let mut f = target;
    while f != outer {
        let (prev, id) = parent[&f];
        let forward_face = reduced.face_of(Step::new(id, true)).expect("dart exists");
        crossings.insert(id, forward_face == prev);
        f = prev;
    }
    Ok(crossings)
}

/// Labelling of the identified graph in which every face, the infinite one
/// included, is balanced: vertex `v_i` of the coloured graph gets `g_i` and
/// each edge from `v_i` to `v_j` gets `g_i^-1 g_j`.
pub fn label_antichain_member(p: &ColouredPlaneGraph) -> Result<GroupLabelling> {
    let host = identify_all_faces(p)?.graph().clone();
    let g = p.graph();
    let index = vertex_index(g.vertices());
    let values = g
        .edges()
        .map(|(id, ed)| (id, FreeWord::quotient(index[&ed.tail], index[&ed.head])))
        .collect();
    GroupLabelling::new(host, values)
}

/// One single-edge minor and whether its proof labelling realises it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorCheck {
    pub op: MinorOp,
    pub realized: bool,
}

/// Builds both single-edge minors of the identified graph for every edge,
/// labels each with the matching proof labelling, and checks the balanced
/// cycles agree exactly.
pub fn verify_proper_minors(p: &ColouredPlaneGraph) -> Result<Vec<MinorCheck>> {
    verify_proper_minors_of(p, &identify(p)?)
}

/// As [`verify_proper_minors`], but taking minors of `bg`, which must have
/// the identified graph of `p` as its underlying graph. A balanced set that
/// differs from the faces shows up as failed checks.
pub fn verify_proper_minors_of(
    p: &ColouredPlaneGraph,
    bg: &BiasedGraph,
) -> Result<Vec<MinorCheck>> {
    if bg.graph() != &p.identified_graph() {
        return Err(Error::HostMismatch);
    }
    let mut out = Vec::with_capacity(2 * bg.edge_count());
    for e in bg.graph().edge_ids() {
        for op in [MinorOp::Delete(e), MinorOp::Contract(e)] {
            let (minor, phi) = match op {
                MinorOp::Delete(_) => (bg.delete_edge(e)?, label_deletion(p, e)?),
                MinorOp::Contract(_) => (bg.contract_edge(e)?, label_contraction(p, e)?),
            };
            out.push(MinorCheck {
                op,
                realized: phi.realizes(&minor)?,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bias::BiasedGraph;
    use crate::constructions::{build_cycle_construction, build_f};
    use crate::graph::ClosedWalk;

    #[test]
    fn doubled_cycles_are_realised() {
        for n in 2..7 {
            let phi = label_2cn(n).unwrap();
            assert!(phi.realizes(&build_2cn(n).unwrap()).unwrap(), "n={n}");
            let second: Vec<FreeWord> = (n..2 * n)
                .map(|i| phi.value(EdgeId(i as u32)).unwrap().clone())
                .collect();
            let product = second.iter().fold(FreeWord::identity(), |acc, w| &acc * w);
            assert!(product.is_identity());
        }
        let bg = build_2cn(4).unwrap();
        assert!(!GroupLabelling::trivial(bg.graph().clone())
            .realizes(&bg)
            .unwrap());
    }

    fn check_all_single_edge_minors(p: &ColouredPlaneGraph) {
        let bg = identify(p).unwrap();
        for e in p.graph().edge_ids() {
            let c = bg.contract_edge(e).unwrap();
            assert!(c.balanced().len() <= 2);
            let phi = label_contraction(p, e).unwrap();
            assert!(phi.realizes(&c).unwrap(), "contraction of {e}");
            let d = bg.delete_edge(e).unwrap();
            let psi = label_deletion(p, e).unwrap();
            assert!(psi.realizes(&d).unwrap(), "deletion of {e}");
        }
    }

    #[test]
    fn f4_minors_are_labelled() {
        check_all_single_edge_minors(&build_f(2).unwrap());
    }

    #[test]
    fn cycle_construction_minors_are_labelled() {
        check_all_single_edge_minors(&build_cycle_construction(3, 3).unwrap());
    }

    #[test]
    fn general_members_minors_are_labelled() {
        use crate::constructions::build_coloured_planar;
        check_all_single_edge_minors(&build_coloured_planar(5, 1).unwrap());
        check_all_single_edge_minors(&build_coloured_planar(4, 1).unwrap());
    }

    #[test]
    fn contraction_subgraph_shape() {
        let p = build_f(2).unwrap();
        let plane = p.plane();
        for e in p.graph().edge_ids() {
            let (a, b) = plane.faces_at(e).unwrap();
            let finite: Vec<usize> = [a, b].into_iter().filter(|&f| f != plane.outer()).collect();
            let mut edges: Vec<EdgeId> = finite
                .iter()
                .flat_map(|&f| plane.faces()[f].edge_set())
                .collect();
            edges.sort_unstable();
            edges.dedup();
            let h = p.graph().edge_subgraph(&edges).unwrap();
            // A cycle has |E| = |V|, a theta |E| = |V| + 1.
            let excess = h.edge_count() as i64 - h.vertex_count() as i64;
            assert_eq!(excess, finite.len() as i64 - 1);
        }
    }

    #[test]
    fn internal_deletion_winds_once_round_the_outer_face() {
        let p = build_f(2).unwrap();
        let plane = p.plane();
        let internal = p
            .graph()
            .edge_ids()
            .find(|&e| {
                let (a, b) = plane.faces_at(e).unwrap();
                a != plane.outer() && b != plane.outer()
            })
            .unwrap();
        let phi = label_deletion(&p, internal).unwrap();
        let outer = plane.outer_face().clone();
        let value = phi.walk_value(&outer).unwrap().cyclically_reduced();
        assert!(
            value == FreeWord::generator(0) || value == FreeWord::generator(0).inverse(),
            "{value}"
        );
        for f in plane.finite_faces() {
            let walk: &ClosedWalk = &plane.faces()[f];
            if walk.edge_set().contains(&internal) {
                continue;
            }
            assert!(phi.walk_value(walk).unwrap().is_identity());
        }
    }

    #[test]
    fn antichain_member_balances_exactly_the_faces() {
        let p = build_f(2).unwrap();
        let bg: BiasedGraph = identify_all_faces(&p).unwrap();
        let phi = label_antichain_member(&p).unwrap();
        assert!(phi.realizes(&bg).unwrap());
    }
}
