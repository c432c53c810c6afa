//! Group labellings: explicit labellings of doubled cycles, the presentation
//! of a biased graph, relator elimination, and the labellings of every
//! single-edge minor of F_4.

use biasgraph::constructions::{build_2cn, build_f};
use biasgraph::grouplab::{
    free_labelling, label_2cn, tautological_labelling, verify_proper_minors,
};

fn main() -> biasgraph::Result<()> {
    let bg = build_2cn(3)?;
    let phi = label_2cn(3)?;
    for (e, w) in phi.values() {
        println!("edge {e} -> {w}");
    }
    println!("realises 2C_3: {}", phi.realizes(&bg)?);

    let tree = bg.graph().spanning_tree()?;
    let (_, pres) = tautological_labelling(&bg, &tree)?;
    println!("presentation {pres}");

    let free = free_labelling(&bg)?.expect("relators eliminate");
    println!(
        "eliminated labelling realises 2C_3: {}",
        free.realizes(&bg)?
    );

    let checks = verify_proper_minors(&build_f(2)?)?;
    let ok = checks.iter().filter(|c| c.realized).count();
    println!("F_4 single-edge minors labelled: {ok}/{}", checks.len());
    Ok(())
}
