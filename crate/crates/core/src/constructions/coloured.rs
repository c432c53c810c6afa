use std::collections::BTreeMap;

use super::families::{f_layout, h_layout, H_0, H_1, H_A, H_B};
use super::{build_f, build_h, ColouredPlaneGraph};
use crate::error::{Error, Result};

/// Parity of `t`, which fixes how often each number must occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// A sequence `x_1..x_2k` over `1..=2s` with `x_i` of the parity of `i`, every
/// odd/even pair consecutive at least `ell` times, and every number occurring
/// at least `ell(s-1)` (odd `t`) or `ell*s` (even `t`) times.
///
/// Built greedily: each next term is the value of the right parity that has
/// been paired least often with the previous term, then occurred least, then
/// is smallest. The sequence stops at the first even length (at least 4)
/// meeting all three conditions.
pub fn choose_sequence(s: usize, ell: usize, parity: Parity) -> Vec<usize> {
    let s = s.max(1);
    let need = match parity {
        Parity::Odd => ell * (s - 1),
        Parity::Even => ell * s,
    };
    let mut pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut occ = vec![0usize; 2 * s + 1];
    let mut seq = vec![1];
    occ[1] = 1;
    let done = |seq: &Vec<usize>, pairs: &BTreeMap<(usize, usize), usize>, occ: &Vec<usize>| {
        seq.len() >= 4
            && seq.len().is_multiple_of(2)
            && (1..=2 * s).all(|v| occ[v] >= need)
            && (1..=2 * s).step_by(2).all(|o| {
                (2..=2 * s)
                    .step_by(2)
                    .all(|e| pairs.get(&(o.min(e), o.max(e))).copied().unwrap_or(0) >= ell)
            })
    };
    while !done(&seq, &pairs, &occ) {
        let prev = *seq.last().expect("non-empty");
        let first = if seq.len() % 2 == 0 { 1 } else { 2 };
        let next = (first..=2 * s)
            .step_by(2)
            .min_by_key(|&c| {
                let key = (prev.min(c), prev.max(c));
                (pairs.get(&key).copied().unwrap_or(0), occ[c], c)
            })
            .expect("at least one candidate");
        *pairs.entry((prev.min(next), prev.max(next))).or_insert(0) += 1;
        occ[next] += 1;
        seq.push(next);
    }
    seq
}

/// A plane graph with `t` colours, every face rainbow, every cycle of length
/// at most `t` facial, the graph a subdivision of a 3-connected graph, and
/// every pair of colours joined by at least `ell` edges. All four properties
/// are checked before returning.
pub fn build_coloured_planar(t: usize, ell: usize) -> Result<ColouredPlaneGraph> {
    if t < 3 {
        return Err(Error::UnsupportedParameters(format!(
            "need t >= 3, got {t}"
        )));
    }
    let ell = ell.max(1);
    let mut last = None;
    for extra in 0..8 {
        let candidate = match t {
            3 => build_f(ell.div_ceil(2).max(2) + extra)?,
            4 => build_h(ell.div_ceil(4).max(2) + extra)?,
            _ if t % 2 == 1 => {
                let s = (t - 1) / 2;
                build_odd(s, ell, &choose_sequence(s, ell + extra, Parity::Odd))?
            }
            _ => {
                let s = (t - 2) / 2;
                build_even(s, &choose_sequence(s, ell + extra, Parity::Even))?
            }
        };
        let report = candidate.check_properties(Some(ell))?;
        if report.all() {
            return Ok(candidate);
        }
        last = Some(report);
    }
    Err(Error::ConstructionProperties(format!(
        "no member for t = {t}, ell = {ell} passed the checks: {last:?}"
    )))
}

/// `x + d`, wrapping within `1..=2s`.
fn shift(x: usize, d: usize, s: usize) -> usize {
    (x - 1 + d) % (2 * s) + 1
}

/// Odd `t = 2s + 1`, palette `a, 1, .., 2s`; colour `j` has index `j`.
fn build_odd(s: usize, ell: usize, seq: &[usize]) -> Result<ColouredPlaneGraph> {
    let k = seq.len() / 2;
    let mut layout = f_layout(k, seq, 0)?;
    let mut seen_of_colour = vec![0usize; 2 * s + 1];
    for (i, &x) in seq.iter().enumerate() {
        let inner: Vec<usize> = (1..s).map(|n| shift(x, 2 * n, s)).collect();
        let e = layout.inner_spoke(i);
        layout.builder.subdivide(e, &inner);

        let m = seen_of_colour[x];
        seen_of_colour[x] += 1;
        let next_to_rim = if m < ell * (s - 1) {
            shift(x, 2 * (m / ell + 1), s)
        } else {
            shift(x, 2, s)
        };
        let mut outer: Vec<usize> = (1..s)
            .map(|n| shift(x, 2 * n, s))
            .filter(|&c| c != next_to_rim)
            .collect();
        outer.push(next_to_rim);
        let e = layout.outer_spoke(i);
        layout.builder.subdivide(e, &outer);
    }
    let mut palette = vec!["a".to_string()];
    palette.extend((1..=2 * s).map(|j| j.to_string()));
    let outer = layout.outer_hub;
    layout.builder.finish(palette, outer)
}

/// Even `t = 2s + 2`, palette `a, 1, .., 2s, b`.
fn build_even(s: usize, seq: &[usize]) -> Result<ColouredPlaneGraph> {
    let k = seq.len() / 2;
    let rings = 2 * k;
    let mut layout = h_layout(k)?;
    let a = 0;
    let b = 2 * s + 1;
    // Recolour: a and b keep their roles, the radial 0/1 paths take the
    // sequence.
    for r in 1..=rings {
        for pos in 0..8 {
            let v = layout.vertex(r, pos);
            let old = layout.builder.colours[v];
            layout.builder.colours[v] = match (old, pos) {
                (H_A, _) => a,
                (H_B, _) => b,
                (H_0 | H_1, 3 | 7) => seq[r - 1],
                (H_0 | H_1, _) => seq[r % rings],
                _ => unreachable!("H colours are 0, 1, a, b"),
            };
        }
    }
    layout.builder.colours[layout.v1] = a;
    layout.builder.colours[layout.v2] = b;

    let same_parity =
        |x: usize| -> Vec<usize> { (1..=2 * s).filter(|&c| c % 2 == x % 2 && c != x).collect() };
    let mut round_robin: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut pair_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in 1..=rings {
        for pos in 0..8 {
            let e = layout.ring_edge(r, pos);
            let (tail, head) = layout.builder.edges[e];
            let (letter_end, numeric_end, numeric_pos) = if pos % 2 == 0 {
                (tail, head, (pos + 1) % 8)
            } else {
                (head, tail, pos)
            };
            let letter = layout.builder.colours[letter_end];
            let x = layout.builder.colours[numeric_end];
            let allowed = same_parity(x);
            // Chain listed from the letter end towards the numeric end.
            let chain: Vec<usize> = if numeric_pos == 1 || numeric_pos == 3 {
                let counter = round_robin.entry((letter, x % 2)).or_insert(0);
                let pool: Vec<usize> = (1..=2 * s).filter(|&c| c % 2 == x % 2).collect();
                let mut first = pool[*counter % pool.len()];
                *counter += 1;
                if first == x {
                    first = pool[*counter % pool.len()];
                    *counter += 1;
                }
                let mut chain = vec![first];
                chain.extend(allowed.iter().copied().filter(|&c| c != first));
                chain
            } else {
                let mut from_numeric = Vec::new();
                let mut prev = x;
                let mut unused = allowed.clone();
                while !unused.is_empty() {
                    let (idx, &c) = unused
                        .iter()
                        .enumerate()
                        .min_by_key(|&(_, &c)| {
                            (
                                pair_count
                                    .get(&(prev.min(c), prev.max(c)))
                                    .copied()
                                    .unwrap_or(0),
                                c,
                            )
                        })
                        .expect("non-empty");
                    unused.remove(idx);
                    from_numeric.push(c);
                    prev = c;
                }
                from_numeric.reverse();
                from_numeric
            };
            let mut prev = x;
            for &c in chain.iter().rev() {
                *pair_count.entry((prev.min(c), prev.max(c))).or_insert(0) += 1;
                prev = c;
            }
            let listed: Vec<usize> = if letter_end == tail {
                chain
            } else {
                chain.into_iter().rev().collect()
            };
            layout.builder.subdivide(e, &listed);
        }
    }
    let mut palette = vec!["a".to_string()];
    palette.extend((1..=2 * s).map(|j| j.to_string()));
    palette.push("b".to_string());
    let outer = layout.v2;
    layout.builder.finish(palette, outer)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct count of the three sequence conditions.
    fn sequence_ok(seq: &[usize], s: usize, ell: usize, parity: Parity) -> bool {
        let need = match parity {
            Parity::Odd => ell * (s - 1),
            Parity::Even => ell * s,
        };
        let parity_ok = seq.iter().enumerate().all(|(i, &x)| x % 2 == (i + 1) % 2);
        let occ_ok = (1..=2 * s).all(|v| seq.iter().filter(|&&x| x == v).count() >= need);
        let pairs_ok = (1..=2 * s).step_by(2).all(|o| {
            (2..=2 * s).step_by(2).all(|e| {
                seq.windows(2)
                    .filter(|w| (w[0] == o && w[1] == e) || (w[0] == e && w[1] == o))
                    .count()
                    >= ell
            })
        });
        parity_ok && occ_ok && pairs_ok && seq.len().is_multiple_of(2)
    }

    #[test]
    fn sequences_meet_their_conditions() {
        for s in 1..5 {
            for ell in 1..4 {
                for parity in [Parity::Odd, Parity::Even] {
                    let seq = choose_sequence(s, ell, parity);
                    assert!(sequence_ok(&seq, s, ell, parity), "s={s} ell={ell}");
                }
            }
        }
        let alt = choose_sequence(1, 3, Parity::Odd);
        assert!(alt.iter().enumerate().all(|(i, &x)| x == 1 + i % 2));
    }

    #[test]
    fn small_members_pass_every_check() {
        for (t, ell) in [(3, 4), (4, 1), (5, 1), (5, 2), (6, 1), (7, 1)] {
            let p = build_coloured_planar(t, ell).unwrap();
            assert_eq!(p.t(), t);
            let r = p.check_properties(Some(ell)).unwrap();
            assert!(r.all(), "t={t} ell={ell}: {r:?}");
        }
    }

    #[test]
    fn degenerate_t_is_rejected() {
        assert!(matches!(
            build_coloured_planar(2, 1),
            Err(Error::UnsupportedParameters(_))
        ));
    }
}
