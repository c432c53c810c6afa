//! Command-line front end. Every command prints a plain-text report: the
//! command line, a SHA-256 digest of each input file, one line per verdict,
//! and the paths of any files written.
//!
//! Exit codes: 0 when every verdict is as asserted, 1 when a check fails,
//! 2 for usage and input errors, 3 when a resource limit is hit.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use crate::bias::{verify_antichain, AntichainVerdict, BiasedGraph, DEFAULT_NODE_LIMIT};
use crate::certify::{search_certificate, shelling_certificate};
use crate::constructions::{
    build_2cn, build_coloured_planar, build_cycle_construction, build_f, build_h, identify,
    identify_all_faces, ColouredPlaneGraph,
};
use crate::error::{Error, Result};
use crate::format::{self, Document};
use crate::graph::EdgeId;
use crate::grouplab::{
    free_labelling, label_2cn, label_antichain_member, label_contraction, label_deletion,
    tautological_labelling, verify_proper_minors_of, GroupLabelling,
};
use crate::matroids::{excluded_minor_check, matroid_of, MatroidKind};

#[derive(Debug, Parser)]
#[command(
    name = "biasgraph",
    version,
    about = "Biased graphs, group labellings and their matroids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a member of one of the families and write it to files.
    Generate {
        #[arg(value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Directory for the output files.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Look for a certificate that a biased graph is not group labellable.
    /// Coloured plane graphs are certified by shelling, biased graphs by a
    /// bounded search.
    Certify {
        input: PathBuf,
        /// Longest walk explored (default twice the number of edges).
        #[arg(long)]
        max_walk_len: Option<usize>,
        /// Most rerouting steps (default balanced cycles plus edges).
        #[arg(long)]
        max_steps: Option<usize>,
        /// Where to write the certificate.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that every single-edge minor of the identified graph is
    /// realised by its proof labelling.
    VerifyMinors {
        /// A coloured plane graph.
        input: PathBuf,
        /// Biased graph to take minors of (default: the identified graph
        /// with the finite faces balanced).
        #[arg(long)]
        biased: Option<PathBuf>,
    },
    /// Lift or frame matroid of a biased graph (or of an identified coloured
    /// plane graph).
    Matroid {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "lift")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "circuits")]
        action: MatroidAction,
        /// Edge ids for `rank` (default: the whole ground set).
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u32>>,
        /// Where to write the matroid for `circuits`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that no member of a family is a minor of another. Coloured plane
    /// graphs are read with every face balanced.
    Antichain {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: usize,
    },
    /// Emit a group labelling and check that it realises its biased graph.
    Label {
        #[command(subcommand)]
        which: LabelCommand,
        /// Where to write the labelling.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LabelCommand {
    /// The doubled n-cycle.
    DoubledCycle {
        #[arg(long)]
        n: usize,
    },
    /// The identified graph of a coloured plane graph with one edge contracted.
    Contraction {
        input: PathBuf,
        #[arg(long)]
        edge: u32,
    },
    /// The identified graph of a coloured plane graph with one edge deleted.
    Deletion {
        input: PathBuf,
        #[arg(long)]
        edge: u32,
    },
    /// The identified graph with every face balanced.
    AntichainMember { input: PathBuf },
    /// Tree edges trivial, one generator per other edge, with the relators
    /// read from the balanced cycles.
    Tautological { input: PathBuf },
    /// Solve the relators one generator at a time, giving a free-group
    /// labelling in which every balanced cycle has identity value.
    Eliminated { input: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    F,
    H,
    General,
    Cycle,
    DoubledCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Lift,
    Frame,
}

impl From<KindArg> for MatroidKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Lift => MatroidKind::Lift,
            KindArg::Frame => MatroidKind::Frame,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatroidAction {
    Circuits,
    Rank,
    Hyperplanes,
    ExcludedMinorCheck,
}

/// What a command did, in the order it is printed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub lines: Vec<String>,
    pub artifacts: Vec<String>,
    pub failed: bool,
}

impl RunReport {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn verdict(&mut self, pass: bool, what: impl fmt::Display) {
        self.failed |= !pass;
        self.lines
            .push(format!("{} {what}", if pass { "PASS" } else { "FAIL" }));
    }

    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.inputs.push((
            path.display().to_string(),
            format!("{:x}", Sha256::digest(&bytes)),
        ));
        String::from_utf8(bytes).map_err(|_| Error::Io(format!("{}: not UTF-8", path.display())))
    }

    fn write(&mut self, path: &Path, text: &str) -> Result<()> {
        fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.artifacts.push(path.display().to_string());
        Ok(())
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command {}", self.command)?;
        for (path, digest) in &self.inputs {
            writeln!(f, "input {path} sha256={digest}")?;
        }
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for a in &self.artifacts {
            writeln!(f, "wrote {a}")?;
        }
        Ok(())
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit { .. } => 3,
        _ => 2,
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out` or the error to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let command = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(&cli, command) {
        Ok(report) => {
            let _ = write!(out, "{report}");
            report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn execute(cli: &Cli, command: String) -> Result<RunReport> {
    let mut r = RunReport {
        command: format!("biasgraph {command}"),
        ..RunReport::default()
    };
    match &cli.command {
        Command::Generate {
            family,
            k,
            t,
            ell,
            n,
            out_dir,
        } => generate(&mut r, *family, *k, *t, *ell, *n, out_dir)?,
        Command::Certify {
            input,
            max_walk_len,
            max_steps,
            out,
        } => certify(&mut r, input, *max_walk_len, *max_steps, out.as_deref())?,
        Command::VerifyMinors { input, biased } => verify_minors(&mut r, input, biased.as_deref())?,
        Command::Matroid {
            input,
            kind,
            action,
            set,
            out,
        } => matroid(
            &mut r,
            input,
            (*kind).into(),
            *action,
            set.as_deref(),
            out.as_deref(),
        )?,
        Command::Antichain { inputs, node_limit } => antichain(&mut r, inputs, *node_limit)?,
        Command::Label { which, out } => label(&mut r, which, out.as_deref())?,
    }
    Ok(r)
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    value.ok_or_else(|| {
        Error::UnsupportedParameters(format!(
            "{} needs --{flag}",
            family
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))
    })
}

fn generate(
    r: &mut RunReport,
    family: Family,
    k: Option<usize>,
    t: Option<usize>,
    ell: Option<usize>,
    n: Option<usize>,
    out_dir: &Path,
) -> Result<()> {
    let (name, plane) = match family {
        Family::F => {
            let k = need(k, "k", family)?;
            (format!("F-k{k}"), Some(build_f(k)?))
        }
        Family::H => {
            let k = need(k, "k", family)?;
            (format!("H-k{k}"), Some(build_h(k)?))
        }
        Family::General => {
            let (t, ell) = (need(t, "t", family)?, need(ell, "ell", family)?);
            (
                format!("general-t{t}-ell{ell}"),
                Some(build_coloured_planar(t, ell)?),
            )
        }
        Family::Cycle => {
            let (t, k) = (need(t, "t", family)?, need(k, "k", family)?);
            (
                format!("cycle-t{t}-k{k}"),
                Some(build_cycle_construction(t, k)?),
            )
        }
        Family::DoubledCycle => {
            let n = need(n, "n", family)?;
            (format!("doubled-cycle-n{n}"), None)
        }
    };
    fs::create_dir_all(out_dir)?;
    let bg = match &plane {
        Some(p) => {
            r.write(
                &out_dir.join(format!("{name}.plane")),
                &format::write_plane(p),
            )?;
            identify(p)?
        }
        None => build_2cn(n.expect("checked above"))?,
    };
    r.write(
        &out_dir.join(format!("{name}.biased")),
        &format::write_biased(&bg),
    )?;
    let (v, e) = match &plane {
        Some(p) => (p.graph().vertex_count(), p.graph().edge_count()),
        None => (bg.vertex_count(), bg.edge_count()),
    };
    r.line(format!(
        "summary V={v} E={e} |B|={} t={}",
        bg.balanced().len(),
        bg.vertex_count()
    ));
    Ok(())
}

enum Input {
    Plane(ColouredPlaneGraph),
    Biased(BiasedGraph),
}

fn read_input(r: &mut RunReport, path: &Path) -> Result<Input> {
    match format::parse_document(&r.read(path)?)? {
        Document::Plane(p) => Ok(Input::Plane(p)),
        Document::Biased(b) => Ok(Input::Biased(b)),
        other => Err(Error::Parse {
            line: 1,
            msg: format!(
                "expected a {} or {} document, found {}",
                format::PLANE,
                format::BIASED,
                other.kind()
            ),
        }),
    }
}

fn read_plane(r: &mut RunReport, path: &Path) -> Result<ColouredPlaneGraph> {
    match read_input(r, path)? {
        Input::Plane(p) => Ok(p),
        Input::Biased(_) => Err(Error::InvalidConstructionInput(format!(
            "{} is a biased graph; a coloured plane graph is needed",
            path.display()
        ))),
    }
}

fn certify(
    r: &mut RunReport,
    input: &Path,
    max_walk_len: Option<usize>,
    max_steps: Option<usize>,
    out: Option<&Path>,
) -> Result<()> {
    let (bg, cert) = match read_input(r, input)? {
        Input::Plane(p) => {
            let bg = identify(&p)?;
            r.line("method shelling");
            (bg, Some(shelling_certificate(&p)?))
        }
        Input::Biased(bg) => {
            let len = max_walk_len.unwrap_or(2 * bg.edge_count());
            let steps = max_steps.unwrap_or(bg.balanced().len() + bg.edge_count());
            r.line(format!(
                "method search max-walk-len={len} max-steps={steps}"
            ));
            let cert = search_certificate(&bg, Some(len), Some(steps))?;
            (bg, cert)
        }
    };
    match cert {
        Some(cert) => {
            let valid = cert.validate(&bg);
            r.line(format!(
                "certificate walks={} steps={}",
                cert.walks.len(),
                cert.steps.len()
            ));
            if let Err(f) = &valid {
                r.verdict(false, format!("certificate validates: {f}"));
            } else {
                r.verdict(true, "certificate validates");
            }
            if let Some(path) = out {
                r.write(path, &format::write_certificate(&cert))?;
            }
            r.line("verdict not-group-labellable");
        }
        None => {
            r.line("verdict no-certificate-within-bounds");
            r.line("note absence within the bounds is not a proof of labellability");
        }
    }
    Ok(())
}

fn verify_minors(r: &mut RunReport, input: &Path, biased: Option<&Path>) -> Result<()> {
    let p = read_plane(r, input)?;
    let bg = match biased {
        Some(path) => match read_input(r, path)? {
            Input::Biased(bg) => bg,
            Input::Plane(q) => identify(&q)?,
        },
        None => identify(&p)?,
    };
    let checks = verify_proper_minors_of(&p, &bg)?;
    let passed = checks.iter().filter(|c| c.realized).count();
    for c in &checks {
        r.verdict(c.realized, c.op);
    }
    r.line(format!("summary {passed}/{} minors realised", checks.len()));
    Ok(())
}

fn matroid(
    r: &mut RunReport,
    input: &Path,
    kind: MatroidKind,
    action: MatroidAction,
    set: Option<&[u32]>,
    out: Option<&Path>,
) -> Result<()> {
    let (bg, plane) = match read_input(r, input)? {
        Input::Plane(p) => (identify(&p)?, Some(p)),
        Input::Biased(bg) => (bg, None),
    };
    if action == MatroidAction::ExcludedMinorCheck {
        let report = excluded_minor_check(&bg, plane.as_ref(), kind)?;
        for c in &report.checks {
            r.verdict(c.pass, &c.name);
        }
        r.line(format!(
            "verdict {kind} excluded-minor {}",
            if report.passed() { "PASS" } else { "FAIL" }
        ));
        return Ok(());
    }
    let m = matroid_of(&bg, kind)?;
    match action {
        MatroidAction::Circuits => {
            r.line(format!(
                "{kind} ground={} rank={} circuits={}",
                m.len(),
                m.full_rank(),
                m.circuit_count()
            ));
            for c in m.circuits() {
                r.line(format!("circuit {}", join(&c)));
            }
            if let Some(path) = out {
                r.write(path, &format::write_matroid(&m))?;
            }
        }
        MatroidAction::Rank => {
            let set: Vec<EdgeId> = match set {
                Some(s) => s.iter().map(|&e| EdgeId(e)).collect(),
                None => m.ground().to_vec(),
            };
            r.line(format!("rank {} of {}", m.rank(&set)?, join(&set)));
        }
        MatroidAction::Hyperplanes => {
            let hs = m.circuit_hyperplanes();
            r.line(format!("circuit-hyperplanes {}", hs.len()));
            for h in &hs {
                r.line(format!("hyperplane {}", join(h)));
            }
            r.line(format!(
                "two-partitioning {}",
                if m.has_two_partitioning_circuit_hyperplanes() {
                    "yes"
                } else {
                    "no"
                }
            ));
        }
        MatroidAction::ExcludedMinorCheck => unreachable!("handled above"),
    }
    Ok(())
}

fn join(edges: &[EdgeId]) -> String {
    edges
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn antichain(r: &mut RunReport, inputs: &[PathBuf], node_limit: usize) -> Result<()> {
    let mut family = Vec::new();
    for path in inputs {
        family.push(match read_input(r, path)? {
            Input::Plane(p) => identify_all_faces(&p)?,
            Input::Biased(bg) => bg,
        });
    }
    match verify_antichain(&family, node_limit)? {
        AntichainVerdict::Antichain => {
            r.verdict(true, format!("antichain of {} biased graphs", family.len()))
        }
        AntichainVerdict::Comparable {
            minor,
            host,
            witness,
        } => {
            r.verdict(
                false,
                format!("input {} is a minor of input {}", minor + 1, host + 1),
            );
            let ops: Vec<String> = witness.ops.iter().map(|op| op.to_string()).collect();
            r.line(format!("witness {}", ops.join(", ")));
        }
    }
    Ok(())
}

fn label(r: &mut RunReport, which: &LabelCommand, out: Option<&Path>) -> Result<()> {
    let (phi, bg): (GroupLabelling, BiasedGraph) = match which {
        LabelCommand::DoubledCycle { n } => (label_2cn(*n)?, build_2cn(*n)?),
        LabelCommand::Contraction { input, edge } => {
            let p = read_plane(r, input)?;
            let e = EdgeId(*edge);
            (label_contraction(&p, e)?, identify(&p)?.contract_edge(e)?)
        }
        LabelCommand::Deletion { input, edge } => {
            let p = read_plane(r, input)?;
            let e = EdgeId(*edge);
            (label_deletion(&p, e)?, identify(&p)?.delete_edge(e)?)
        }
        LabelCommand::AntichainMember { input } => {
            let p = read_plane(r, input)?;
            (label_antichain_member(&p)?, identify_all_faces(&p)?)
        }
        LabelCommand::Tautological { input } => {
            let bg = match read_input(r, input)? {
                Input::Plane(p) => identify(&p)?,
                Input::Biased(bg) => bg,
            };
            let tree = bg.graph().spanning_tree()?;
            let (phi, pres) = tautological_labelling(&bg, &tree)?;
            r.line(format!(
                "presentation generators={} relators={}",
                pres.generators.len(),
                pres.relators.len()
            ));
            for l in format::write_presentation(&pres).lines().skip(1) {
                r.line(l);
            }
            r.line(
                "note values lie in the free group on the generators; the relators are not imposed",
            );
            (phi, bg)
        }
        LabelCommand::Eliminated { input } => {
            let bg = match read_input(r, input)? {
                Input::Plane(p) => identify(&p)?,
                Input::Biased(bg) => bg,
            };
            match free_labelling(&bg)? {
                Some(phi) => (phi, bg),
                None => {
                    r.verdict(false, "relator elimination stalled");
                    return Ok(());
                }
            }
        }
    };
    for (e, w) in phi.values() {
        r.line(format!("label {e} {w}"));
    }
    if let Some(path) = out {
        r.write(path, &format::write_labelling(&phi))?;
    }
    match which {
        LabelCommand::Tautological { .. } => {
            let balanced = phi.balanced_set()?;
            r.line(format!(
                "free-group balanced cycles {} of {} asserted",
                balanced.len(),
                bg.balanced().len()
            ));
        }
        _ => r.verdict(phi.realizes(&bg)?, "labelling realises the biased graph"),
    }
    Ok(())
}
