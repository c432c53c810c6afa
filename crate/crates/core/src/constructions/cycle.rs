use super::families::f_layout;
use super::ColouredPlaneGraph;
use crate::error::{Error, Result};

/// A coloured plane graph with exactly `4k` faces, each reading the colours
/// `0, 1, .., t-1` in one direction or the other. Identifying colour classes
/// gives a cycle of length `t` with every edge replaced by `2k` parallel
/// edges.
///
/// `t = 3` recolours the hubs of `F_2k`. For `t >= 5`, write
/// `t = 3s + p + q` with `0 <= p <= q <= 1`; the hubs become `s + p`, rim
/// colour 1 becomes `2s + p + q`, and each edge of `F_2k` is subdivided so the
/// new vertices fill in the colours between its ends.
pub fn build_cycle_construction(t: usize, k: usize) -> Result<ColouredPlaneGraph> {
    if t < 3 || t == 4 || k < 2 || (t, k) == (5, 2) || (t, k) == (8, 2) {
        return Err(Error::UnsupportedParameters(format!(
            "no cycle construction for t = {t}, k = {k}"
        )));
    }
    let palette: Vec<String> = (0..t).map(|c| c.to_string()).collect();
    if t == 3 {
        let rim: Vec<usize> = (0..2 * k).map(|i| i % 2).collect();
        let layout = f_layout(k, &rim, 2)?;
        let outer = layout.outer_hub;
        return layout.builder.finish(palette, outer);
    }
    let (p, q) = match t % 3 {
        0 => (0, 0),
        1 => (0, 1),
        _ => (1, 1),
    };
    let s = (t - p - q) / 3;
    let hub = s + p;
    let other = 2 * s + p + q;
    let rim: Vec<usize> = (0..2 * k)
        .map(|i| if i % 2 == 0 { 0 } else { other })
        .collect();
    let mut layout = f_layout(k, &rim, hub)?;
    let n = 2 * k;
    // Colours strictly between the ends, listed from the given tail.
    let between = |from: usize, to: usize| -> Vec<usize> {
        match (from, to) {
            (0, x) if x == other => ((other + 1)..t).rev().collect(),
            (x, 0) if x == other => ((other + 1)..t).collect(),
            _ if from < to => ((from + 1)..to).collect(),
            _ => ((to + 1)..from).rev().collect(),
        }
    };
    for e in 0..3 * n {
        let (u, v) = layout.builder.edges[e];
        let (cu, cv) = (layout.builder.colours[u], layout.builder.colours[v]);
        let chain = between(cu, cv);
        layout.builder.subdivide(e, &chain);
    }
    let outer = layout.outer_hub;
    layout.builder.finish(palette, outer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::identify;
    use crate::graph::{enumerate_cycles, VertexId};

    fn reads_in_order(p: &ColouredPlaneGraph) -> bool {
        let t = p.t();
        p.plane().faces().iter().all(|f| {
            let colours: Vec<usize> = f.vertices(p.graph()).iter().map(|&v| p.colour(v)).collect();
            let start = colours.iter().position(|&c| c == 0).unwrap();
            let forward: Vec<usize> = (0..t).map(|i| colours[(start + i) % t]).collect();
            let backward: Vec<usize> = (0..t).map(|i| colours[(start + t - i) % t]).collect();
            let want: Vec<usize> = (0..t).collect();
            colours.len() == t && (forward == want || backward == want)
        })
    }

    #[test]
    fn faces_read_the_cycle() {
        for (t, k) in [(3, 2), (5, 3), (6, 2), (7, 2), (8, 3), (9, 2)] {
            let p = build_cycle_construction(t, k).unwrap();
            assert_eq!(p.plane().faces().len(), 4 * k, "t={t} k={k}");
            assert!(reads_in_order(&p), "t={t} k={k}");
            assert!(p.check_properties(None).unwrap().all(), "t={t} k={k}");
        }
    }

    #[test]
    fn identification_gives_a_fat_cycle() {
        for (t, k) in [(3, 2), (6, 2), (5, 3)] {
            let bg = identify(&build_cycle_construction(t, k).unwrap()).unwrap();
            let g = bg.graph();
            for c in 0..t as u32 {
                let next = (c + 1) % t as u32;
                assert_eq!(g.multiplicity(VertexId(c), VertexId(next)), 2 * k);
            }
            let total: usize = (0..t as u32)
                .map(|c| g.multiplicity(VertexId(c), VertexId((c + 1) % t as u32)))
                .sum();
            assert_eq!(total, g.edge_count());
        }
    }

    #[test]
    fn non_facial_cycles_are_long() {
        for (t, k, bound) in [(6, 2, 8), (5, 3, 6)] {
            let p = build_cycle_construction(t, k).unwrap();
            let faces: Vec<_> = p.plane().faces().iter().map(|f| f.edge_set()).collect();
            let shortest = enumerate_cycles(p.graph(), Some(bound + 2))
                .unwrap()
                .into_iter()
                .filter(|c| !faces.contains(&c.edges().to_vec()))
                .map(|c| c.len())
                .min()
                .unwrap();
            assert!(shortest >= bound, "t={t}: {shortest}");
        }
    }

    #[test]
    fn excluded_parameters() {
        for (t, k) in [(5, 2), (8, 2), (4, 3), (2, 3), (6, 1)] {
            assert!(matches!(
                build_cycle_construction(t, k),
                Err(Error::UnsupportedParameters(_))
            ));
        }
    }
}
