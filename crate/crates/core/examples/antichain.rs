//! Minor containment between biased graphs: doubled cycles form an
//! antichain, and 2C_3 sits inside a member of the infinite family.

use biasgraph::bias::{is_minor, verify_antichain, AntichainVerdict, DEFAULT_NODE_LIMIT};
use biasgraph::constructions::{build_2cn, build_coloured_planar, identify_all_faces};

fn main() -> biasgraph::Result<()> {
    let doubled = (3..=5)
        .map(build_2cn)
        .collect::<biasgraph::Result<Vec<_>>>()?;
    let members = [4, 5]
        .into_iter()
        .map(|ell| identify_all_faces(&build_coloured_planar(3, ell)?))
        .collect::<biasgraph::Result<Vec<_>>>()?;

    for (name, family) in [("doubled cycles", &doubled), ("t=3 members", &members)] {
        match verify_antichain(family, DEFAULT_NODE_LIMIT)? {
            AntichainVerdict::Antichain => println!("{name}: antichain"),
            AntichainVerdict::Comparable { minor, host, .. } => {
                println!("{name}: member {minor} is a minor of member {host}")
            }
        }
    }

    if let Some(w) = is_minor(&doubled[0], &members[0])? {
        let ops: Vec<String> = w.ops.iter().map(|op| op.to_string()).collect();
        println!("2C_3 is a minor of the ell=4 member: {}", ops.join(", "));
        println!("witness replays: {}", w.verify(&doubled[0], &members[0]));
    }
    Ok(())
}
