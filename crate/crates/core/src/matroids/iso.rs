use std::collections::{BTreeMap, HashSet};

use super::{bits, CircuitMatroid};
use crate::error::{Error, Result};
use crate::graph::EdgeId;

pub const DEFAULT_ISO_NODE_LIMIT: usize = 10_000_000;

pub fn matroid_isomorphic(
    a: &CircuitMatroid,
    b: &CircuitMatroid,
) -> Result<Option<BTreeMap<EdgeId, EdgeId>>> {
    matroid_isomorphic_with_limit(a, b, DEFAULT_ISO_NODE_LIMIT)
}

/// A bijection of ground sets carrying circuits onto circuits. Elements are
/// matched only to elements lying in the same number of circuits of each
/// size.
pub fn matroid_isomorphic_with_limit(
    a: &CircuitMatroid,
    b: &CircuitMatroid,
    node_limit: usize,
) -> Result<Option<BTreeMap<EdgeId, EdgeId>>> {
    let n = a.len();
    if n != b.len() || a.circuit_count() != b.circuit_count() {
        return Ok(None);
    }
    let census = |m: &CircuitMatroid| -> Vec<Vec<usize>> {
        (0..m.len())
            .map(|i| {
                let mut sizes: Vec<usize> = m
                    .masks()
                    .iter()
                    .filter(|&&c| c >> i & 1 == 1)
                    .map(|c| c.count_ones() as usize)
                    .collect();
                sizes.sort_unstable();
                sizes
            })
            .collect()
    };
    let (ca, cb) = (census(a), census(b));
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    // Circuits of `a` grouped by their highest element.
    let mut closing: Vec<Vec<u128>> = vec![Vec::new(); n];
    for &c in a.masks() {
        let top = bits(c).last().expect("nonempty circuit");
        closing[top].push(c);
    }
    let targets: HashSet<u128> = b.masks().iter().copied().collect();
    let mut search = Search {
        ca: &ca,
        cb: &cb,
        closing: &closing,
        targets: &targets,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        limit: node_limit,
    };
    if search.assign(0)? {
        Ok(Some(
            (0..n)
                .map(|i| (a.ground()[i], b.ground()[search.image[i]]))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    ca: &'a [Vec<usize>],
    cb: &'a [Vec<usize>],
    closing: &'a [Vec<u128>],
    targets: &'a HashSet<u128>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: usize,
    limit: usize,
}

impl Search<'_> {
    fn assign(&mut self, i: usize) -> Result<bool> {
        if i == self.image.len() {
            return Ok(true);
        }
        for j in 0..self.image.len() {
            if self.used[j] || self.ca[i] != self.cb[j] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::ResourceLimit {
                    what: "matroid isomorphism search nodes",
                    limit: self.limit,
                });
            }
            self.image[i] = j;
            let ok = self.closing[i].iter().all(|&c| {
                let mapped = bits(c).fold(0u128, |m, k| m | 1 << self.image[k]);
                self.targets.contains(&mapped)
            });
            if ok {
                self.used[j] = true;
                if self.assign(i + 1)? {
                    return Ok(true);
                }
                self.used[j] = false;
            }
        }
        self.image[i] = usize::MAX;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bias::BiasedGraph;
    use crate::constructions::build_2cn;
    use crate::graph::{Multigraph, VertexId};
    use crate::matroids::{frame_matroid, lift_matroid, uniform_matroid};

    #[test]
    fn uniform_two_ways() {
        let u = uniform_matroid(2, (0..4).map(EdgeId).collect()).unwrap();
        let mut g = Multigraph::with_vertices(2);
        for _ in 0..4 {
            g.push_edge(VertexId(0), VertexId(1)).unwrap();
        }
        let l = lift_matroid(&BiasedGraph::contrabalanced(g)).unwrap();
        let f = matroid_isomorphic(&u, &l).unwrap().unwrap();
        assert_eq!(f.len(), 4);
        let u5 = uniform_matroid(2, (0..5).map(EdgeId).collect()).unwrap();
        assert!(matroid_isomorphic(&u, &u5).unwrap().is_none());
    }

    #[test]
    fn relabelled_copy_is_found_and_checked() {
        let m = lift_matroid(&build_2cn(4).unwrap()).unwrap();
        let shifted = CircuitMatroid::new(
            m.ground().iter().map(|e| EdgeId(e.0 + 100)).collect(),
            m.circuits()
                .into_iter()
                .map(|c| c.into_iter().rev().map(|e| EdgeId(107 - e.0)).collect()),
        )
        .unwrap();
        let map = matroid_isomorphic(&m, &shifted).unwrap().unwrap();
        for c in m.circuits() {
            let mut img: Vec<EdgeId> = c.iter().map(|e| map[e]).collect();
            img.sort_unstable();
            assert!(shifted.circuits().contains(&img));
        }
    }

    #[test]
    fn lift_and_frame_of_doubled_square_differ() {
        // Digons {0,4} and {2,6} are vertex-disjoint: a lift circuit of size
        // 4, while the frame matroid needs a connecting path.
        let bg = build_2cn(4).unwrap();
        let l = lift_matroid(&bg).unwrap();
        let f = frame_matroid(&bg).unwrap();
        assert_ne!(l, f);
        assert!(matroid_isomorphic(&l, &f).unwrap().is_none());
    }

    #[test]
    fn node_limit() {
        let m = lift_matroid(&build_2cn(4).unwrap()).unwrap();
        assert!(matches!(
            matroid_isomorphic_with_limit(&m, &m, 2),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
