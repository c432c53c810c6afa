//! Lift and frame matroids: circuit-hyperplanes of doubled cycles, the
//! biased graphs representing U_{2,4}, and the excluded-minor check on a
//! small member of the infinite family.

use biasgraph::constructions::{build_2cn, build_coloured_planar, identify};
use biasgraph::matroids::{excluded_minor_check, matroid_of, u2m_representations, MatroidKind};

fn main() -> biasgraph::Result<()> {
    for kind in [MatroidKind::Lift, MatroidKind::Frame] {
        for n in 3..=5 {
            let m = matroid_of(&build_2cn(n)?, kind)?;
            println!(
                "{kind} 2C_{n}: rank {} circuits {} circuit-hyperplanes {} partitioning {}",
                m.full_rank(),
                m.circuit_count(),
                m.circuit_hyperplanes().len(),
                m.has_two_partitioning_circuit_hyperplanes()
            );
        }
        for bg in u2m_representations(4, kind)? {
            let loops = bg.graph().edges().filter(|(_, e)| e.is_loop()).count();
            println!("{kind} U_(2,4) representation with {loops} loop(s)");
        }
    }

    let p = build_coloured_planar(3, 4)?;
    let bg = identify(&p)?;
    for kind in [MatroidKind::Lift, MatroidKind::Frame] {
        let report = excluded_minor_check(&bg, Some(&p), kind)?;
        println!(
            "{kind} excluded minor: {} ({} checks)",
            report.passed(),
            report.checks.len()
        );
    }
    Ok(())
}
