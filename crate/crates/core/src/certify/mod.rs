//! Certificates that a biased graph is not group labellable: a sequence of
//! closed walks, each obtained from the previous by rerouting along a
//! balanced cycle, leading from an unbalanced cycle to a balanced one.

mod search;
mod shelling;

use std::fmt;

pub use search::{search_certificate, search_certificate_capped, DEFAULT_STATE_CAP};
pub use shelling::shelling_certificate;

use crate::bias::BiasedGraph;
use crate::error::{Error, ReroutingError, Result};
use crate::graph::{orient_path, ClosedWalk, Cycle, Multigraph, Step};

/// Replace the `len` steps of the current walk starting at index `start`
/// (read cyclically) by the other arc of `cycle` between the same ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReroutingStep {
    pub cycle: Cycle,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReroutingCertificate {
    pub walks: Vec<ClosedWalk>,
    pub steps: Vec<ReroutingStep>,
}

/// Where and why a certificate was rejected. `index` is the walk at fault.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFailure {
    pub index: usize,
    pub reason: String,
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "walk {}: {}", self.index, self.reason)
    }
}

/// The path of `walk` starting at `start` with `len` steps, read cyclically,
/// if it is a path in `cycle`. Returns the steps and the replacement arc.
pub(crate) fn rerouting_arcs(
    graph: &Multigraph,
    walk: &ClosedWalk,
    step: &ReroutingStep,
) -> std::result::Result<(Vec<Step>, Vec<Step>), ReroutingError> {
    let n = walk.len();
    if step.len == 0 || step.start >= n || step.len > n.max(1) {
        return Err(ReroutingError::SubwalkNotPresent);
    }
    let sub: Vec<Step> = (0..step.len)
        .map(|i| walk.steps()[(step.start + i) % n])
        .collect();
    if sub.iter().any(|s| !step.cycle.contains(s.edge)) {
        return Err(ReroutingError::SubwalkNotAPath);
    }
    let mut vertices = Vec::with_capacity(sub.len() + 1);
    for s in &sub {
        vertices.push(s.start(graph).ok_or(ReroutingError::SubwalkNotPresent)?);
    }
    let last = sub[sub.len() - 1];
    vertices.push(last.end(graph).ok_or(ReroutingError::SubwalkNotPresent)?);
    let mut sorted = vertices.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vertices.len() {
        return Err(ReroutingError::SubwalkNotAPath);
    }
    let (u, v) = (vertices[0], vertices[vertices.len() - 1]);
    let rest: Vec<_> = step
        .cycle
        .edges()
        .iter()
        .copied()
        .filter(|e| !sub.iter().any(|s| s.edge == *e))
        .collect();
    if rest.is_empty() {
        return Err(ReroutingError::ArcMismatch);
    }
    match orient_path(graph, &rest, u) {
        Some((arc, end)) if end == v => Ok((sub, arc)),
        _ => Err(ReroutingError::ArcMismatch),
    }
}

/// Splices the other arc of the step's cycle in place of the subwalk. When
/// the subwalk wraps past the end of the walk, the result starts with the
/// new arc.
pub fn apply_rerouting(
    graph: &Multigraph,
    walk: &ClosedWalk,
    step: &ReroutingStep,
) -> Result<ClosedWalk> {
    let (_, arc) = rerouting_arcs(graph, walk, step)?;
    let n = walk.len();
    let steps = walk.steps();
    let end = step.start + step.len;
    let out: Vec<Step> = if end <= n {
        steps[..step.start]
            .iter()
            .chain(arc.iter())
            .chain(steps[end..].iter())
            .copied()
            .collect()
    } else {
        arc.iter()
            .chain(steps[end - n..step.start].iter())
            .copied()
            .collect()
    };
    ClosedWalk::new(graph, out)
}

impl ReroutingCertificate {
    /// Checks every condition: the first walk goes once around an unbalanced
    /// cycle, each later walk is the rerouting of its predecessor along a
    /// balanced cycle, and the last walk goes once around a balanced cycle.
    pub fn validate(&self, bg: &BiasedGraph) -> std::result::Result<(), CertificateFailure> {
        validate(bg, self)
    }
}

pub fn validate(
    bg: &BiasedGraph,
    cert: &ReroutingCertificate,
) -> std::result::Result<(), CertificateFailure> {
    let g = bg.graph();
    let fail = |index: usize, reason: String| Err(CertificateFailure { index, reason });
    if cert.walks.is_empty() {
        return fail(0, "no walks".into());
    }
    if cert.steps.len() + 1 != cert.walks.len() {
        return fail(
            0,
            format!(
                "{} walks need {} steps, found {}",
                cert.walks.len(),
                cert.walks.len() - 1,
                cert.steps.len()
            ),
        );
    }
    for (i, w) in cert.walks.iter().enumerate() {
        if let Err(e) = w.check(g) {
            return fail(i, e.to_string());
        }
    }
    match cert.walks[0].as_cycle(g) {
        Some(c) if !bg.is_balanced(&c) => {}
        Some(_) => return fail(0, "first walk goes around a balanced cycle".into()),
        None => return fail(0, "first walk is not simple".into()),
    }
    for (i, step) in cert.steps.iter().enumerate() {
        if !bg.is_balanced(&step.cycle) {
            return fail(i + 1, format!("cycle {} is not balanced", step.cycle));
        }
        match apply_rerouting(g, &cert.walks[i], step) {
            Ok(next) if next.same_closed_walk(&cert.walks[i + 1]) => {}
            Ok(next) => {
                return fail(
                    i + 1,
                    format!("rerouting gives {next}, not {}", cert.walks[i + 1]),
                )
            }
            Err(e) => return fail(i + 1, e.to_string()),
        }
    }
    let last = cert.walks.len() - 1;
    match cert.walks[last].as_cycle(g) {
        Some(c) if bg.is_balanced(&c) => Ok(()),
        Some(_) => fail(last, "last walk goes around an unbalanced cycle".into()),
        None => fail(last, "last walk is not simple".into()),
    }
}

/// Builds a certificate from a starting walk and a list of steps, computing
/// each intermediate walk.
pub fn certificate_from_steps(
    graph: &Multigraph,
    start: ClosedWalk,
    steps: Vec<ReroutingStep>,
) -> Result<ReroutingCertificate> {
    let mut walks = vec![start];
    for step in &steps {
        let next = apply_rerouting(graph, walks.last().expect("non-empty"), step)?;
        walks.push(next);
    }
    Ok(ReroutingCertificate { walks, steps })
}

impl From<CertificateFailure> for Error {
    fn from(f: CertificateFailure) -> Self {
        Error::InvalidWalk(f.to_string())
    }
}
