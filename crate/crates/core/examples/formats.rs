//! The text formats: write a coloured plane graph, its identified biased
//! graph and a certificate, then read them back.

use biasgraph::certify::shelling_certificate;
use biasgraph::constructions::{build_f, identify};
use biasgraph::format::{self, Document};

fn main() -> biasgraph::Result<()> {
    let p = build_f(2)?;
    let bg = identify(&p)?;
    let cert = shelling_certificate(&p)?;

    let texts = [
        format::write_plane(&p),
        format::write_biased(&bg),
        format::write_certificate(&cert),
    ];
    print!("{}", texts[1]);

    for text in &texts {
        let doc = format::parse_document(text)?;
        println!(
            "parsed a {} document of {} lines",
            doc.kind(),
            text.lines().count()
        );
        if let Document::Biased(back) = doc {
            assert_eq!(back, bg);
        }
    }

    let err =
        format::parse_biased("biasgraph biased-graph\nvertices 0 1\nedge x 0 1\n").unwrap_err();
    println!("malformed input: {err}");
    Ok(())
}
