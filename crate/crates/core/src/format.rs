//! Line-based text formats. The first non-comment line names the kind of
//! document (`biasgraph <kind>`); every later line is a keyword followed by
//! whitespace-separated fields. Blank lines and lines starting with `#` are
//! ignored. Parse errors carry the 1-based line number.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bias::BiasedGraph;
use crate::certify::{ReroutingCertificate, ReroutingStep};
use crate::constructions::ColouredPlaneGraph;
use crate::error::{Error, Result};
use crate::graph::{ClosedWalk, Cycle, EdgeId, Multigraph, PlaneGraph, Step, VertexId};
use crate::grouplab::{FreeWord, GroupLabelling, GroupPresentation};
use crate::matroids::CircuitMatroid;

pub const GRAPH: &str = "graph";
pub const BIASED: &str = "biased-graph";
pub const PLANE: &str = "coloured-plane-graph";
pub const LABELLING: &str = "labelling";
pub const PRESENTATION: &str = "presentation";
pub const CERTIFICATE: &str = "certificate";
pub const MATROID: &str = "matroid";

/// Any document that can be read back.
#[derive(Debug, Clone)]
pub enum Document {
    Graph(Multigraph),
    Biased(BiasedGraph),
    Plane(ColouredPlaneGraph),
    Labelling(GroupLabelling),
    Certificate(ReroutingCertificate),
    Matroid(CircuitMatroid),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Graph(_) => GRAPH,
            Document::Biased(_) => BIASED,
            Document::Plane(_) => PLANE,
            Document::Labelling(_) => LABELLING,
            Document::Certificate(_) => CERTIFICATE,
            Document::Matroid(_) => MATROID,
        }
    }
}

struct Line<'a> {
    no: usize,
    key: &'a str,
    fields: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.no,
            msg: msg.into(),
        }
    }

    fn num<T: std::str::FromStr>(&self, s: &str) -> Result<T> {
        s.parse()
            .map_err(|_| self.err(format!("expected a number, found {s:?}")))
    }

    fn nums<T: std::str::FromStr>(&self) -> Result<Vec<T>> {
        self.fields.iter().map(|s| self.num(s)).collect()
    }

    fn exactly(&self, n: usize) -> Result<()> {
        if self.fields.len() == n {
            Ok(())
        } else {
            Err(self.err(format!(
                "{} takes {n} fields, found {}",
                self.key,
                self.fields.len()
            )))
        }
    }

    fn unexpected(&self) -> Error {
        self.err(format!("unexpected keyword {:?}", self.key))
    }
}

/// Splits off the header, returning its kind and the remaining lines.
fn lines(text: &str) -> Result<(&str, usize, Vec<Line<'_>>)> {
    let mut body = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hno, header) = body.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty document".into(),
    })?;
    let kind = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["biasgraph", kind] => kind,
        _ => {
            return Err(Error::Parse {
                line: hno,
                msg: format!("expected header `biasgraph <kind>`, found {header:?}"),
            })
        }
    };
    let rest = body
        .map(|(no, l)| {
            let mut parts = l.split_whitespace();
            let key = parts.next().unwrap_or_default();
            Line {
                no,
                key,
                fields: parts.collect(),
            }
        })
        .collect();
    Ok((kind, hno, rest))
}

fn expect_kind<'a>(text: &'a str, want: &str) -> Result<(usize, Vec<Line<'a>>)> {
    let (kind, hno, rest) = lines(text)?;
    if kind != want {
        return Err(Error::Parse {
            line: hno,
            msg: format!("expected a {want} document, found {kind}"),
        });
    }
    Ok((hno, rest))
}

fn ids<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_graph_body(out: &mut String, g: &Multigraph) {
    let _ = writeln!(out, "vertices {}", ids(g.vertices()));
    for (id, e) in g.edges() {
        let _ = writeln!(out, "edge {id} {} {}", e.tail, e.head);
    }
}

/// Handles `vertices` and `edge` lines; returns false for other keywords.
fn graph_line(g: &mut Multigraph, line: &Line<'_>) -> Result<bool> {
    match line.key {
        "vertices" => {
            for v in line.nums::<u32>()? {
                g.add_vertex(VertexId(v));
            }
        }
        "edge" => {
            line.exactly(3)?;
            let id = EdgeId(line.num(line.fields[0])?);
            let (t, h) = (
                VertexId(line.num(line.fields[1])?),
                VertexId(line.num(line.fields[2])?),
            );
            g.add_vertex(t);
            g.add_vertex(h);
            g.add_edge(id, t, h).map_err(|e| line.err(e.to_string()))?;
        }
        _ => return Ok(false),
    }
    Ok(true)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("biasgraph {GRAPH}\n");
    write_graph_body(&mut out, g);
    out
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let (_, body) = expect_kind(text, GRAPH)?;
    let mut g = Multigraph::new();
    for line in &body {
        if !graph_line(&mut g, line)? {
            return Err(line.unexpected());
        }
    }
    Ok(g)
}

pub fn write_biased(bg: &BiasedGraph) -> String {
    let mut out = format!("biasgraph {BIASED}\n");
    write_graph_body(&mut out, bg.graph());
    for c in bg.balanced() {
        let _ = writeln!(out, "balanced {}", ids(c.edges()));
    }
    out
}

pub fn parse_biased(text: &str) -> Result<BiasedGraph> {
    let (hno, body) = expect_kind(text, BIASED)?;
    let mut g = Multigraph::new();
    let mut balanced = Vec::new();
    for line in &body {
        if graph_line(&mut g, line)? {
            continue;
        }
        match line.key {
            "balanced" => balanced.push((line, line.nums::<u32>()?)),
            _ => return Err(line.unexpected()),
        }
    }
    let mut cycles = Vec::new();
    for (line, edges) in balanced {
        let c = Cycle::new(&g, edges.into_iter().map(EdgeId).collect())
            .map_err(|e| line.err(e.to_string()))?;
        cycles.push(c);
    }
    BiasedGraph::new(g, cycles).map_err(|e| Error::Parse {
        line: hno,
        msg: e.to_string(),
    })
}

pub fn write_plane(p: &ColouredPlaneGraph) -> String {
    let mut out = format!("biasgraph {PLANE}\n");
    let _ = writeln!(out, "palette {}", p.palette().join(" "));
    for (v, c) in p.colours() {
        let _ = writeln!(out, "colour {v} {c}");
    }
    write_graph_body(&mut out, p.graph());
    for (v, around) in p.plane().rotation() {
        let _ = writeln!(out, "rotation {v} {}", ids(around));
    }
    let _ = writeln!(out, "outer {}", p.plane().outer_face().steps()[0]);
    out
}

fn parse_step(line: &Line<'_>, tok: &str) -> Result<Step> {
    let (forward, rest) = match tok.as_bytes().first() {
        Some(b'+') => (true, &tok[1..]),
        Some(b'-') => (false, &tok[1..]),
        _ => return Err(line.err(format!("expected a step like +3 or -3, found {tok:?}"))),
    };
    Ok(Step::new(EdgeId(line.num(rest)?), forward))
}

pub fn parse_plane(text: &str) -> Result<ColouredPlaneGraph> {
    let (hno, body) = expect_kind(text, PLANE)?;
    let mut g = Multigraph::new();
    let mut palette: Option<Vec<String>> = None;
    let mut colour = BTreeMap::new();
    let mut rotation = BTreeMap::new();
    let mut outer: Option<(usize, Step)> = None;
    for line in &body {
        if graph_line(&mut g, line)? {
            continue;
        }
        match line.key {
            "palette" => palette = Some(line.fields.iter().map(|s| s.to_string()).collect()),
            "colour" => {
                line.exactly(2)?;
                colour.insert(
                    VertexId(line.num(line.fields[0])?),
                    line.num::<usize>(line.fields[1])?,
                );
            }
            "rotation" => {
                let ns = line.nums::<u32>()?;
                let (&v, rest) = ns
                    .split_first()
                    .ok_or_else(|| line.err("rotation needs a vertex"))?;
                rotation.insert(VertexId(v), rest.iter().map(|&e| EdgeId(e)).collect());
            }
            "outer" => {
                line.exactly(1)?;
                outer = Some((line.no, parse_step(line, line.fields[0])?));
            }
            _ => return Err(line.unexpected()),
        }
    }
    let at_header = |msg: String| Error::Parse { line: hno, msg };
    let palette = palette.ok_or_else(|| at_header("missing palette line".into()))?;
    let (ono, dart) = outer.ok_or_else(|| at_header("missing outer line".into()))?;
    let plane = PlaneGraph::new(g, rotation, 0).map_err(|e| at_header(e.to_string()))?;
    let face = plane.face_of(dart).ok_or(Error::Parse {
        line: ono,
        msg: format!("{dart} is not a side of any edge"),
    })?;
    let plane = plane
        .with_outer(face)
        .map_err(|e| at_header(e.to_string()))?;
    ColouredPlaneGraph::new(plane, colour, palette).map_err(|e| at_header(e.to_string()))
}

pub fn write_labelling(phi: &GroupLabelling) -> String {
    let mut out = format!("biasgraph {LABELLING}\n");
    write_graph_body(&mut out, phi.host());
    for (e, w) in phi.values() {
        let _ = writeln!(out, "label {e} {w}");
    }
    out
}

pub fn parse_labelling(text: &str) -> Result<GroupLabelling> {
    let (hno, body) = expect_kind(text, LABELLING)?;
    let mut g = Multigraph::new();
    let mut values = BTreeMap::new();
    for line in &body {
        if graph_line(&mut g, line)? {
            continue;
        }
        match line.key {
            "label" => {
                let (first, rest) = line
                    .fields
                    .split_first()
                    .ok_or_else(|| line.err("label needs an edge"))?;
                let w: FreeWord = rest
                    .join(" ")
                    .parse()
                    .map_err(|e: crate::grouplab::ParseWordError| line.err(e.to_string()))?;
                values.insert(EdgeId(line.num(first)?), w);
            }
            _ => return Err(line.unexpected()),
        }
    }
    GroupLabelling::new(g, values).map_err(|e| Error::Parse {
        line: hno,
        msg: e.to_string(),
    })
}

/// Presentations are written for reading, not parsed back.
pub fn write_presentation(p: &GroupPresentation) -> String {
    let mut out = format!("biasgraph {PRESENTATION}\n");
    for (k, e) in p.generators.iter().enumerate() {
        let _ = writeln!(out, "generator g{k} {e}");
    }
    for (c, r) in &p.relators {
        let _ = writeln!(out, "relator {r} ; cycle {}", ids(c.edges()));
    }
    out
}

pub fn write_certificate(c: &ReroutingCertificate) -> String {
    let mut out = format!("biasgraph {CERTIFICATE}\n");
    for (i, w) in c.walks.iter().enumerate() {
        let _ = writeln!(out, "walk {w}");
        if let Some(s) = c.steps.get(i) {
            let _ = writeln!(out, "step {} {} {}", s.start, s.len, ids(s.cycle.edges()));
        }
    }
    out
}

/// Walks are not checked against any graph here; validation does that.
pub fn parse_certificate(text: &str) -> Result<ReroutingCertificate> {
    let (_, body) = expect_kind(text, CERTIFICATE)?;
    let mut walks = Vec::new();
    let mut steps = Vec::new();
    for line in &body {
        match line.key {
            "walk" => {
                if walks.len() != steps.len() {
                    return Err(line.err("two walks without a step between them"));
                }
                let s = line
                    .fields
                    .iter()
                    .map(|t| parse_step(line, t))
                    .collect::<Result<Vec<_>>>()?;
                if s.is_empty() {
                    return Err(line.err("empty walk"));
                }
                walks.push(ClosedWalk::from_steps_unchecked(s));
            }
            "step" => {
                if walks.len() != steps.len() + 1 {
                    return Err(line.err("a step must follow a walk"));
                }
                let ns = line.nums::<u32>()?;
                if ns.len() < 3 {
                    return Err(line.err("step needs start, length and cycle edges"));
                }
                steps.push(ReroutingStep {
                    start: ns[0] as usize,
                    len: ns[1] as usize,
                    cycle: Cycle::from_edges_unchecked(
                        ns[2..].iter().map(|&e| EdgeId(e)).collect(),
                    ),
                });
            }
            _ => return Err(line.unexpected()),
        }
    }
    Ok(ReroutingCertificate { walks, steps })
}

pub fn write_matroid(m: &CircuitMatroid) -> String {
    format!("biasgraph {MATROID}\n{m}")
}

pub fn parse_matroid(text: &str) -> Result<CircuitMatroid> {
    let (hno, body) = expect_kind(text, MATROID)?;
    let mut ground = None;
    let mut circuits = Vec::new();
    for line in &body {
        match line.key {
            "ground" => ground = Some(line.nums::<u32>()?),
            "circuit" => circuits.push(line.nums::<u32>()?),
            _ => return Err(line.unexpected()),
        }
    }
    let at_header = |msg: String| Error::Parse { line: hno, msg };
    let ground = ground.ok_or_else(|| at_header("missing ground line".into()))?;
    CircuitMatroid::new(
        ground.into_iter().map(EdgeId).collect(),
        circuits
            .into_iter()
            .map(|c| c.into_iter().map(EdgeId).collect()),
    )
    .map_err(|e| at_header(e.to_string()))
}

/// Reads any parseable document, dispatching on the header.
pub fn parse_document(text: &str) -> Result<Document> {
    let (kind, hno, _) = lines(text)?;
    Ok(match kind {
        GRAPH => Document::Graph(parse_graph(text)?),
        BIASED => Document::Biased(parse_biased(text)?),
        PLANE => Document::Plane(parse_plane(text)?),
        LABELLING => Document::Labelling(parse_labelling(text)?),
        CERTIFICATE => Document::Certificate(parse_certificate(text)?),
        MATROID => Document::Matroid(parse_matroid(text)?),
        other => {
            return Err(Error::Parse {
                line: hno,
                msg: format!("unknown document kind {other:?}"),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::shelling_certificate;
    use crate::constructions::{build_2cn, build_f, build_h, identify};
    use crate::grouplab::label_2cn;
    use crate::matroids::lift_matroid;

    #[test]
    fn round_trips() {
        let bg = build_2cn(4).unwrap();
        assert_eq!(parse_graph(&write_graph(bg.graph())).unwrap(), *bg.graph());
        assert_eq!(parse_biased(&write_biased(&bg)).unwrap(), bg);
        for p in [build_f(2).unwrap(), build_h(1).unwrap()] {
            let back = parse_plane(&write_plane(&p)).unwrap();
            assert_eq!(back, p);
            assert_eq!(write_plane(&back), write_plane(&p));
        }
        let phi = label_2cn(4).unwrap();
        assert_eq!(parse_labelling(&write_labelling(&phi)).unwrap(), phi);
        let p = build_f(2).unwrap();
        let cert = shelling_certificate(&p).unwrap();
        let back = parse_certificate(&write_certificate(&cert)).unwrap();
        assert_eq!(back, cert);
        back.validate(&identify(&p).unwrap()).unwrap();
        let m = lift_matroid(&bg).unwrap();
        assert_eq!(parse_matroid(&write_matroid(&m)).unwrap(), m);
    }

    #[test]
    fn dispatch_on_header() {
        let text = write_biased(&build_2cn(3).unwrap());
        assert_eq!(parse_document(&text).unwrap().kind(), BIASED);
        let with_comments = format!("# made by hand\n\n{text}");
        assert!(matches!(
            parse_document(&with_comments).unwrap(),
            Document::Biased(_)
        ));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "biasgraph biased-graph\nvertices 0 1\nedge 0 0 1\nedge 1 0 x\n";
        assert_eq!(
            parse_biased(text).unwrap_err(),
            Error::Parse {
                line: 4,
                msg: "expected a number, found \"x\"".into()
            }
        );
        let text = "biasgraph biased-graph\nedge 0 0 1\nedge 1 0 1\nbalanced 0\n";
        assert!(matches!(
            parse_biased(text),
            Err(Error::Parse { line: 4, .. })
        ));
        let text = "biasgraph graph\nedge 0 0 1\nfrobnicate\n";
        assert!(matches!(
            parse_graph(text),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("biasgraph matroid\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
        let cert = "biasgraph certificate\nwalk +0 +1\nwalk +2\n";
        assert!(matches!(
            parse_certificate(cert),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
