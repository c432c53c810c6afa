use super::{matroid_minor, matroid_of, uniqueness_hypotheses, MatroidKind};
use crate::bias::MinorOp;
use crate::certify::{search_certificate, shelling_certificate};
use crate::constructions::{identify, ColouredPlaneGraph};
use crate::error::Result;
use crate::grouplab::{free_labelling, label_contraction, label_deletion};

use crate::bias::BiasedGraph;

/// One named check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedMinorReport {
    pub kind: MatroidKind,
    pub checks: Vec<Check>,
}

impl ExcludedMinorReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

/// Evidence that the lift or frame matroid of `bg` is an excluded minor for
/// the class of matroids of group labellable biased graphs:
///
/// - the uniqueness hypotheses hold, so `bg` is the only biased graph with
///   this matroid;
/// - a rerouting certificate shows `bg` is not group labellable;
/// - for every edge and both minor operations, the biased-graph minor is
///   group labellable and its matroid equals the matroid minor.
///
/// With the coloured plane graph at hand, the certificate comes from a
/// shelling and the minors use the explicit labellings. Without it, the
/// certificate is searched for and the minors are labelled by relator
/// elimination, which may fail to decide.
pub fn excluded_minor_check(
    bg: &BiasedGraph,
    plane: Option<&ColouredPlaneGraph>,
    kind: MatroidKind,
) -> Result<ExcludedMinorReport> {
    let mut checks = Vec::new();
    let mut check = |name: String, pass: bool| checks.push(Check { name, pass });
    check("uniqueness hypotheses".into(), uniqueness_hypotheses(bg));
    let certified = match plane {
        Some(p) => {
            let cert = shelling_certificate(p)?;
            identify(p)? == *bg && cert.validate(bg).is_ok()
        }
        None => search_certificate(bg, None, None)?.is_some_and(|c| c.validate(bg).is_ok()),
    };
    check("not group labellable".into(), certified);
    let m = matroid_of(bg, kind)?;
    check(
        format!("{kind} matroid circuit axioms"),
        m.check_axioms().is_ok(),
    );
    for e in bg.graph().edge_ids() {
        for op in [MinorOp::Delete(e), MinorOp::Contract(e)] {
            let (minor, mm) = match op {
                MinorOp::Delete(_) => (bg.delete_edge(e)?, matroid_minor(&m, &[e], &[])?),
                MinorOp::Contract(_) => (bg.contract_edge(e)?, matroid_minor(&m, &[], &[e])?),
            };
            let labelled = match plane {
                Some(p) => {
                    let phi = match op {
                        MinorOp::Delete(_) => label_deletion(p, e)?,
                        MinorOp::Contract(_) => label_contraction(p, e)?,
                    };
                    phi.realizes(&minor)?
                }
                None => match free_labelling(&minor)? {
                    Some(phi) => phi.realizes(&minor)?,
                    None => false,
                },
            };
            check(format!("{op} labellable"), labelled);
            check(
                format!("{op} {kind} matroid agrees"),
                matroid_of(&minor, kind)? == mm,
            );
        }
    }
    Ok(ExcludedMinorReport { kind, checks })
}
