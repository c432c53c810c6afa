use super::builder::Builder;
use super::ColouredPlaneGraph;
use crate::error::{Error, Result};

/// Layout of `F_2k`: rim vertex `i` has id `i`, the inner hub `2k`, the outer
/// hub `2k + 1`. Rim edge `i` joins rim `i` to rim `i + 1`, edge `2k + i` joins
/// the inner hub to rim `i` and edge `4k + i` the outer hub to rim `i`.
pub(crate) struct FLayout {
    pub builder: Builder,
    pub k: usize,
    pub outer_hub: usize,
}

impl FLayout {
    pub fn inner_spoke(&self, i: usize) -> usize {
        2 * self.k + i
    }

    pub fn outer_spoke(&self, i: usize) -> usize {
        4 * self.k + i
    }
}

/// Colours: rim `i` gets `rim[i]`, both hubs get `hub`.
pub(crate) fn f_layout(k: usize, rim: &[usize], hub: usize) -> Result<FLayout> {
    if k < 2 {
        return Err(Error::UnsupportedParameters(format!(
            "F_2k needs k >= 2 to be a simple graph, got k = {k}"
        )));
    }
    let n = 2 * k;
    let mut b = Builder::default();
    for &c in rim.iter().take(n) {
        b.vertex(c);
    }
    let inner_hub = b.vertex(hub);
    let outer_hub = b.vertex(hub);
    for i in 0..n {
        b.edge(i, (i + 1) % n);
    }
    for i in 0..n {
        b.edge(inner_hub, i);
    }
    for i in 0..n {
        b.edge(outer_hub, i);
    }
    for i in 0..n {
        b.rotation[i] = vec![2 * n + i, i, n + i, (i + n - 1) % n];
    }
    b.rotation[inner_hub] = (0..n).map(|i| n + i).collect();
    b.rotation[outer_hub] = (0..n).rev().map(|i| 2 * n + i).collect();
    Ok(FLayout {
        builder: b,
        k,
        outer_hub,
    })
}

/// The 2k-cycle coloured alternately 0 and 1 with a hub of colour `a` in
/// each face. Palette `0, 1, a`.
pub fn build_f(k: usize) -> Result<ColouredPlaneGraph> {
    let rim: Vec<usize> = (0..2 * k).map(|i| i % 2).collect();
    let layout = f_layout(k, &rim, 2)?;
    let outer = layout.outer_hub;
    layout
        .builder
        .finish(vec!["0".into(), "1".into(), "a".into()], outer)
}

/// Layout of `H_2k`: ring `r` (1 innermost) position `i` has id
/// `8(r - 1) + i`, hub `v1` id `16k`, hub `v2` id `16k + 1`.
pub(crate) struct HLayout {
    pub builder: Builder,
    pub v1: usize,
    pub v2: usize,
}

impl HLayout {
    pub fn vertex(&self, ring: usize, pos: usize) -> usize {
        8 * (ring - 1) + pos % 8
    }

    /// Edge from `(ring, pos)` to `(ring, pos + 1)`.
    pub fn ring_edge(&self, ring: usize, pos: usize) -> usize {
        8 * (ring - 1) + pos % 8
    }
}

pub(crate) const H_0: usize = 0;
pub(crate) const H_1: usize = 1;
pub(crate) const H_A: usize = 2;
pub(crate) const H_B: usize = 3;

/// The colour forced on `(ring, pos)` once ring 1 reads `b 0 b 1 b 0 b 1`.
pub(crate) fn h_colour(ring: usize, pos: usize) -> usize {
    let odd_ring = ring % 2 == 1;
    match (pos % 2, pos % 4, odd_ring) {
        (0, _, true) => H_B,
        (0, _, false) => H_A,
        (_, 1, true) => H_0,
        (_, _, true) => H_1,
        (_, 1, false) => H_1,
        _ => H_0,
    }
}

pub(crate) fn h_layout(k: usize) -> Result<HLayout> {
    if k < 1 {
        return Err(Error::UnsupportedParameters("H_2k needs k >= 1".into()));
    }
    let rings = 2 * k;
    let mut b = Builder::default();
    for r in 1..=rings {
        for i in 0..8 {
            b.vertex(h_colour(r, i));
        }
    }
    let v1 = b.vertex(H_A);
    let v2 = b.vertex(H_B);
    let id = |r: usize, i: usize| 8 * (r - 1) + i % 8;
    for r in 1..=rings {
        for i in 0..8 {
            b.edge(id(r, i), id(r, i + 1));
        }
    }
    let matching = |r: usize, i: usize| 8 * rings + 8 * (r - 1) + i;
    for r in 1..rings {
        for i in 0..8 {
            b.edge(id(r, i), id(r + 1, i));
        }
    }
    let v1_spoke = |j: usize| 16 * rings - 8 + j;
    let v2_spoke = |j: usize| 16 * rings - 4 + j;
    for j in 0..4 {
        b.edge(v1, id(1, 2 * j + 1));
    }
    for j in 0..4 {
        b.edge(v2, id(rings, 2 * j + 1));
    }
    for r in 1..=rings {
        for i in 0..8 {
            let mut around = Vec::with_capacity(4);
            if r < rings {
                around.push(matching(r, i));
            } else if i % 2 == 1 {
                around.push(v2_spoke(i / 2));
            }
            around.push(id(r, i));
            if r > 1 {
                around.push(matching(r - 1, i));
            } else if i % 2 == 1 {
                around.push(v1_spoke(i / 2));
            }
            around.push(id(r, i + 7));
            b.rotation[id(r, i)] = around;
        }
    }
    b.rotation[v1] = (0..4).map(v1_spoke).collect();
    b.rotation[v2] = (0..4).rev().map(v2_spoke).collect();
    Ok(HLayout { builder: b, v1, v2 })
}

/// `2k` nested 8-cycles joined by perfect matchings, with a hub of colour
/// `a` inside and one of colour `b` outside. Palette `0, 1, a, b`.
pub fn build_h(k: usize) -> Result<ColouredPlaneGraph> {
    let layout = h_layout(k)?;
    let outer = layout.v2;
    layout
        .builder
        .finish(vec!["0".into(), "1".into(), "a".into(), "b".into()], outer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    #[test]
    fn f_counts() {
        for k in 2..6 {
            let f = build_f(k).unwrap();
            let g = f.plane().graph();
            assert_eq!(g.vertex_count(), 2 * k + 2);
            assert_eq!(g.edge_count(), 6 * k);
            assert_eq!(f.plane().faces().len(), 4 * k);
            assert!(f.plane().faces().iter().all(|w| w.len() == 3));
            assert!(f
                .plane()
                .outer_face()
                .vertices(g)
                .contains(&VertexId(2 * k as u32 + 1)));
        }
        assert!(matches!(build_f(1), Err(Error::UnsupportedParameters(_))));
    }

    #[test]
    fn h_counts() {
        for k in 1..4 {
            let h = build_h(k).unwrap();
            let g = h.plane().graph();
            assert_eq!(g.vertex_count(), 16 * k + 2);
            assert_eq!(g.edge_count(), 32 * k);
            assert_eq!(h.plane().faces().len(), 16 * k);
            assert!(h.plane().faces().iter().all(|w| w.len() == 4));
        }
    }

    /// Exhaustive search over all colourings of each ring in turn: only one
    /// choice makes every 4-cycle between it and the previous ring rainbow.
    #[test]
    fn h_colour_extension_is_unique() {
        let rings = 4;
        let mut prev: Vec<usize> = (0..8).map(|i| h_colour(1, i)).collect();
        assert_eq!(prev, vec![H_B, H_0, H_B, H_1, H_B, H_0, H_B, H_1]);
        for r in 2..=rings {
            let mut solutions = Vec::new();
            for code in 0..4usize.pow(8) {
                let ring: Vec<usize> = (0..8).map(|i| code / 4usize.pow(i) % 4).collect();
                let ok = (0..8).all(|i| {
                    let mut seen = [prev[i], prev[(i + 1) % 8], ring[i], ring[(i + 1) % 8]];
                    seen.sort_unstable();
                    seen == [0, 1, 2, 3]
                });
                if ok {
                    solutions.push(ring);
                }
            }
            assert_eq!(solutions.len(), 1, "ring {r}");
            let expected: Vec<usize> = (0..8).map(|i| h_colour(r, i)).collect();
            assert_eq!(solutions[0], expected);
            prev = expected;
        }
    }
}
