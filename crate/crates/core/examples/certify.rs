//! Rerouting certificates: one read off a shelling of a plane graph, one
//! found by search, and a search that comes back empty.

use biasgraph::certify::{search_certificate, shelling_certificate};
use biasgraph::constructions::{build_2cn, build_f, identify};

fn main() -> biasgraph::Result<()> {
    let p = build_f(2)?;
    let bg = identify(&p)?;

    let cert = shelling_certificate(&p)?;
    cert.validate(&bg).expect("shelling certificate validates");
    println!("shelling: {} steps", cert.steps.len());
    for (i, w) in cert.walks.iter().enumerate() {
        println!("  walk {i}: {w}");
    }

    match search_certificate(&bg, None, None)? {
        Some(c) => {
            c.validate(&bg).expect("search certificate validates");
            println!("search: {} steps", c.steps.len());
        }
        None => println!("search: nothing within bounds"),
    }

    // Doubled cycles are group labellable, so no certificate can exist.
    let doubled = build_2cn(4)?;
    println!(
        "2C_4 search: {}",
        if search_certificate(&doubled, None, None)?.is_some() {
            "found"
        } else {
            "none"
        }
    );
    Ok(())
}
