//! Builds members of each family, checks their defining properties and
//! prints the size of the identified biased graph.

use biasgraph::constructions::{
    build_coloured_planar, build_cycle_construction, build_f, build_h, identify, ColouredPlaneGraph,
};

fn show(name: &str, p: &ColouredPlaneGraph, ell: Option<usize>) -> biasgraph::Result<()> {
    let props = p.check_properties(ell)?;
    let bg = identify(p)?;
    println!(
        "{name:<16} plane V={:<3} E={:<3} faces={:<3} t={}  identified V={} |B|={}  properties {}",
        p.graph().vertex_count(),
        p.graph().edge_count(),
        p.plane().faces().len(),
        p.t(),
        bg.vertex_count(),
        bg.balanced().len(),
        if props.all() { "ok" } else { "violated" }
    );
    Ok(())
}

fn main() -> biasgraph::Result<()> {
    for k in 2..=4 {
        show(&format!("F_{}", 2 * k), &build_f(k)?, None)?;
    }
    for k in 1..=2 {
        show(&format!("H k={k}"), &build_h(k)?, None)?;
    }
    for (t, ell) in [(3, 4), (3, 5), (4, 4)] {
        show(
            &format!("t={t} ell={ell}"),
            &build_coloured_planar(t, ell)?,
            Some(ell),
        )?;
    }
    show("cycle t=3 k=2", &build_cycle_construction(3, 2)?, None)?;
    Ok(())
}
