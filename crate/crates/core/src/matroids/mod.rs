//! Matroids given by their circuits, the lift and frame matroids of a biased
//! graph, and the small uniform matroids `U_{2,m}`.

mod biased;
mod excluded;
mod iso;
mod uniform;

use std::fmt;
use std::str::FromStr;

pub use biased::{frame_matroid, lift_matroid, matroid_of, DEFAULT_CIRCUIT_CAP};
pub use excluded::{excluded_minor_check, Check, ExcludedMinorReport};
pub use iso::{matroid_isomorphic, matroid_isomorphic_with_limit, DEFAULT_ISO_NODE_LIMIT};
pub use uniform::{u2m_representations, uniform_matroid, uniqueness_hypotheses};

use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatroidKind {
    Lift,
    Frame,
}

impl fmt::Display for MatroidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatroidKind::Lift => "lift",
            MatroidKind::Frame => "frame",
        })
    }
}

impl FromStr for MatroidKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lift" => Ok(MatroidKind::Lift),
            "frame" => Ok(MatroidKind::Frame),
            other => Err(format!("unknown matroid kind {other:?}")),
        }
    }
}

/// A matroid on a set of edge ids, stored as its circuits. Element `i` of
/// the sorted ground set is bit `i` of each circuit mask; circuits are kept
/// sorted by size and then by mask, so equal matroids compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircuitMatroid {
    ground: Vec<EdgeId>,
    circuits: Vec<u128>,
}

fn bits(x: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| x >> i & 1 == 1)
}

/// Keeps the inclusion-minimal nonempty sets, in canonical order.
fn minimal(mut sets: Vec<u128>) -> Vec<u128> {
    sets.retain(|&s| s != 0);
    sets.sort_unstable_by_key(|&s| (s.count_ones(), s));
    sets.dedup();
    let mut kept: Vec<u128> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

impl CircuitMatroid {
    /// Checks that every circuit lies in the ground set and that the circuit
    /// axioms hold.
    pub fn new(
        ground: Vec<EdgeId>,
        circuits: impl IntoIterator<Item = Vec<EdgeId>>,
    ) -> Result<Self> {
        let mut ground = ground;
        ground.sort_unstable();
        ground.dedup();
        if ground.len() > MAX_GROUND {
            return Err(Error::ResourceLimit {
                what: "ground set elements",
                limit: MAX_GROUND,
            });
        }
        let mut masks = Vec::new();
        for c in circuits {
            let mut m = 0u128;
            for e in c {
                let i = ground
                    .binary_search(&e)
                    .map_err(|_| Error::NotInGroundSet(e))?;
                m |= 1 << i;
            }
            if m == 0 {
                return Err(Error::CircuitAxiom("empty circuit".into()));
            }
            masks.push(m);
        }
        masks.sort_unstable_by_key(|&s| (s.count_ones(), s));
        masks.dedup();
        let m = CircuitMatroid {
            ground,
            circuits: masks,
        };
        m.check_axioms().map_err(Error::CircuitAxiom)?;
        Ok(m)
    }

    /// From candidate circuit masks over `ground`, keeping the minimal ones.
    pub(crate) fn from_masks(ground: Vec<EdgeId>, masks: Vec<u128>) -> Self {
        CircuitMatroid {
            ground,
            circuits: minimal(masks),
        }
    }

    pub fn ground(&self) -> &[EdgeId] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }

    pub(crate) fn masks(&self) -> &[u128] {
        &self.circuits
    }

    pub fn circuits(&self) -> Vec<Vec<EdgeId>> {
        self.circuits.iter().map(|&c| self.edges_of(c)).collect()
    }

    fn edges_of(&self, mask: u128) -> Vec<EdgeId> {
        bits(mask).map(|i| self.ground[i]).collect()
    }

    fn full(&self) -> u128 {
        if self.ground.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.ground.len()) - 1
        }
    }

    pub(crate) fn mask(&self, set: &[EdgeId]) -> Result<u128> {
        let mut m = 0u128;
        for &e in set {
            let i = self
                .ground
                .binary_search(&e)
                .map_err(|_| Error::NotInGroundSet(e))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    fn dependent_mask(&self, x: u128) -> bool {
        self.circuits.iter().any(|&c| c & !x == 0)
    }

    fn rank_mask(&self, x: u128) -> usize {
        let mut indep = 0u128;
        for i in bits(x) {
            if !self.dependent_mask(indep | 1 << i) {
                indep |= 1 << i;
            }
        }
        indep.count_ones() as usize
    }

    fn closure_mask(&self, x: u128) -> u128 {
        let mut out = x;
        for &c in &self.circuits {
            let outside = c & !x;
            if outside.count_ones() == 1 {
                out |= outside;
            }
        }
        out
    }

    pub fn is_independent(&self, set: &[EdgeId]) -> Result<bool> {
        Ok(!self.dependent_mask(self.mask(set)?))
    }

    /// Size of a maximal circuit-free subset, grown greedily.
    pub fn rank(&self, set: &[EdgeId]) -> Result<usize> {
        Ok(self.rank_mask(self.mask(set)?))
    }

    pub fn full_rank(&self) -> usize {
        self.rank_mask(self.full())
    }

    /// The set together with every element whose addition keeps the rank.
    pub fn closure(&self, set: &[EdgeId]) -> Result<Vec<EdgeId>> {
        Ok(self.edges_of(self.closure_mask(self.mask(set)?)))
    }

    /// Circuits that are also hyperplanes: rank one less than the matroid,
    /// and closed.
    pub fn circuit_hyperplanes(&self) -> Vec<Vec<EdgeId>> {
        let r = self.full_rank();
        self.circuits
            .iter()
            .filter(|&&c| r >= 1 && self.rank_mask(c) == r - 1 && self.closure_mask(c) == c)
            .map(|&c| self.edges_of(c))
            .collect()
    }

    /// Exactly two circuit-hyperplanes, disjoint and covering the ground set.
    pub fn has_two_partitioning_circuit_hyperplanes(&self) -> bool {
        let hs = self.circuit_hyperplanes();
        if hs.len() != 2 {
            return false;
        }
        let (a, b) = (
            self.mask(&hs[0]).unwrap_or(0),
            self.mask(&hs[1]).unwrap_or(0),
        );
        a & b == 0 && a | b == self.full()
    }

    /// Nonempty circuits, none containing another, and strong enough
    /// elimination: for circuits `C1 != C2` and `e` in both, `(C1 u C2) - e`
    /// contains a circuit.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let cs = &self.circuits;
        if cs.contains(&0) {
            return Err("empty circuit".into());
        }
        for (i, &a) in cs.iter().enumerate() {
            for &b in &cs[i + 1..] {
                if a & !b == 0 || b & !a == 0 {
                    return Err(format!(
                        "circuit {:?} contains {:?}",
                        self.edges_of(a | b),
                        self.edges_of(a & b)
                    ));
                }
                let common = a & b;
                for e in bits(common) {
                    let rest = (a | b) & !(1 << e);
                    if !self.dependent_mask(rest) {
                        return Err(format!(
                            "elimination fails for {:?}, {:?} at {}",
                            self.edges_of(a),
                            self.edges_of(b),
                            self.ground[e]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Deletes `delete` and contracts `contract`, keeping edge ids.
    pub fn minor(&self, delete: &[EdgeId], contract: &[EdgeId]) -> Result<CircuitMatroid> {
        matroid_minor(self, delete, contract)
    }

    fn restrict_to(&self, keep: u128, circuits: Vec<u128>) -> CircuitMatroid {
        let kept: Vec<usize> = bits(keep).collect();
        let ground = kept.iter().map(|&i| self.ground[i]).collect();
        let remap = |c: u128| {
            kept.iter()
                .enumerate()
                .filter(|(_, &i)| c >> i & 1 == 1)
                .fold(0u128, |m, (j, _)| m | 1 << j)
        };
        CircuitMatroid::from_masks(ground, circuits.into_iter().map(remap).collect())
    }
}

/// Deletion keeps the circuits avoiding the deleted set. Contracting `e`
/// gives the minimal nonempty sets among `C - e` for circuits `C`.
pub fn matroid_minor(
    m: &CircuitMatroid,
    delete: &[EdgeId],
    contract: &[EdgeId],
) -> Result<CircuitMatroid> {
    let d = m.mask(delete)?;
    let c = m.mask(contract)?;
    if d & c != 0 {
        let i = bits(d & c).next().expect("nonempty");
        return Err(Error::MinorOverlap(m.ground[i]));
    }
    let mut circuits: Vec<u128> = m.circuits.iter().copied().filter(|&k| k & d == 0).collect();
    for e in bits(c) {
        circuits = minimal(circuits.into_iter().map(|k| k & !(1 << e)).collect());
    }
    Ok(m.restrict_to(m.full() & !d & !c, circuits))
}

impl fmt::Display for CircuitMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.ground.iter().map(|e| e.0.to_string()).collect();
        writeln!(f, "ground {}", ids.join(" "))?;
        for c in self.circuits() {
            let ids: Vec<String> = c.iter().map(|e| e.0.to_string()).collect();
            writeln!(f, "circuit {}", ids.join(" "))?;
        }
        Ok(())
    }
}
