use std::fs;
use std::path::Path;
use std::process::Command;

fn biasgraph(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_biasgraph"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    let mut text = String::from_utf8(out.stdout).unwrap();
    text.push_str(&String::from_utf8(out.stderr).unwrap());
    (out.status.code().unwrap(), text)
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let (code, text) = biasgraph(dir, args);
    assert_eq!(code, 0, "{text}");
    text
}

#[test]
fn generate_writes_both_files() {
    let dir = tempfile::tempdir().unwrap();
    let text = ok(dir.path(), &["generate", "f", "--k", "2"]);
    assert!(text.contains("summary V=6 E=12 |B|=7 t=3"), "{text}");
    assert!(dir.path().join("F-k2.plane").exists());
    assert!(dir.path().join("F-k2.biased").exists());
    assert!(text.contains("wrote "));
}

#[test]
fn unsupported_parameters_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let (code, text) = biasgraph(dir.path(), &["generate", "cycle", "--t", "5", "--k", "2"]);
    assert_eq!(code, 2, "{text}");
    assert!(text.contains("error"));
}

#[test]
fn certify_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "f", "--k", "2"]);
    ok(d, &["generate", "doubled-cycle", "--n", "4"]);

    let text = ok(d, &["certify", "F-k2.plane", "--out", "F.cert"]);
    assert!(text.contains("method shelling"));
    assert!(text.contains("PASS certificate validates"));
    assert!(text.contains("verdict not-group-labellable"));
    assert!(fs::read_to_string(d.join("F.cert"))
        .unwrap()
        .starts_with("biasgraph certificate"));

    let text = ok(d, &["certify", "F-k2.biased"]);
    assert!(text.contains("method search"));
    assert!(text.contains("verdict not-group-labellable"));

    let text = ok(d, &["certify", "doubled-cycle-n4.biased"]);
    assert!(
        text.contains("verdict no-certificate-within-bounds"),
        "{text}"
    );
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "doubled-cycle", "--n", "3"]);
    let text = fs::read_to_string(d.join("doubled-cycle-n3.biased")).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let edge = lines.iter().position(|l| l.starts_with("edge ")).unwrap();
    lines[edge] = "edge zero 0 1";
    fs::write(d.join("bad.biased"), lines.join("\n")).unwrap();
    let (code, out) = biasgraph(d, &["certify", "bad.biased"]);
    assert_eq!(code, 2);
    assert!(out.contains(&format!("line {}", edge + 1)), "{out}");
}

#[test]
fn verify_minors_passes_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "f", "--k", "2"]);
    let text = ok(d, &["verify-minors", "F-k2.plane"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 24);
    assert!(text.contains("summary 24/24 minors realised"));

    // Dropping one balanced face makes the proof labellings disagree.
    let biased = fs::read_to_string(d.join("F-k2.biased")).unwrap();
    let first = biased
        .lines()
        .position(|l| l.starts_with("balanced "))
        .unwrap();
    let tampered: Vec<&str> = biased
        .lines()
        .enumerate()
        .filter(|&(i, _)| i != first)
        .map(|(_, l)| l)
        .collect();
    fs::write(d.join("tampered.biased"), tampered.join("\n")).unwrap();
    let (code, text) = biasgraph(
        d,
        &["verify-minors", "F-k2.plane", "--biased", "tampered.biased"],
    );
    assert_eq!(code, 1, "{text}");
    assert!(text.lines().any(|l| l.starts_with("FAIL ")));
}

#[test]
fn matroid_actions() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "doubled-cycle", "--n", "5"]);
    for kind in ["lift", "frame"] {
        let text = ok(
            d,
            &[
                "matroid",
                "doubled-cycle-n5.biased",
                "--kind",
                kind,
                "--action",
                "hyperplanes",
            ],
        );
        assert!(text.contains("circuit-hyperplanes 2"), "{text}");
        let text = ok(
            d,
            &[
                "matroid",
                "doubled-cycle-n5.biased",
                "--kind",
                kind,
                "--action",
                "rank",
            ],
        );
        assert!(text.contains("rank 5 of"), "{text}");
    }
    let text = ok(
        d,
        &[
            "matroid",
            "doubled-cycle-n5.biased",
            "--action",
            "rank",
            "--set",
            "0,1,2,3,4",
        ],
    );
    assert!(text.contains("rank 4 of 0 1 2 3 4"), "{text}");

    fs::write(
        d.join("k2-4.biased"),
        "biasgraph biased-graph\nvertices 0 1\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\nedge 3 0 1\n",
    )
    .unwrap();
    let text = ok(d, &["matroid", "k2-4.biased", "--out", "u24.matroid"]);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("circuit ")).count(),
        4
    );
    assert!(fs::read_to_string(d.join("u24.matroid"))
        .unwrap()
        .starts_with("biasgraph matroid"));
}

#[test]
fn excluded_minor_check_on_small_member() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "general", "--t", "3", "--ell", "4"]);
    let text = ok(
        d,
        &[
            "matroid",
            "general-t3-ell4.plane",
            "--kind",
            "frame",
            "--action",
            "excluded-minor-check",
        ],
    );
    assert!(text.contains("verdict frame excluded-minor PASS"));

    ok(d, &["generate", "doubled-cycle", "--n", "3"]);
    let (code, text) = biasgraph(
        d,
        &[
            "matroid",
            "doubled-cycle-n3.biased",
            "--action",
            "excluded-minor-check",
        ],
    );
    assert_eq!(code, 1, "{text}");
    assert!(text.contains("verdict lift excluded-minor FAIL"));
}

#[test]
fn antichain_and_comparable_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for n in ["3", "4", "5"] {
        ok(d, &["generate", "doubled-cycle", "--n", n]);
    }
    let text = ok(
        d,
        &[
            "antichain",
            "doubled-cycle-n3.biased",
            "doubled-cycle-n4.biased",
            "doubled-cycle-n5.biased",
        ],
    );
    assert!(text.contains("PASS antichain of 3 biased graphs"));

    ok(d, &["generate", "general", "--t", "3", "--ell", "4"]);
    let (code, text) = biasgraph(
        d,
        &[
            "antichain",
            "doubled-cycle-n3.biased",
            "general-t3-ell4.plane",
        ],
    );
    assert_eq!(code, 1, "{text}");
    assert!(text.contains("FAIL input 1 is a minor of input 2"));
    assert!(text.contains("witness "));
}

#[test]
fn label_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let text = ok(
        d,
        &["label", "doubled-cycle", "--n", "4", "--out", "l.labelling"],
    );
    assert!(
        text.contains("PASS labelling realises the biased graph"),
        "{text}"
    );
    assert!(fs::read_to_string(d.join("l.labelling"))
        .unwrap()
        .starts_with("biasgraph labelling"));

    ok(d, &["generate", "f", "--k", "2"]);
    let text = ok(d, &["label", "contraction", "F-k2.plane", "--edge", "3"]);
    assert!(text.contains("PASS "));
    let text = ok(d, &["label", "deletion", "F-k2.plane", "--edge", "3"]);
    assert!(text.contains("PASS "));

    ok(d, &["generate", "general", "--t", "3", "--ell", "4"]);
    let text = ok(d, &["label", "antichain-member", "general-t3-ell4.plane"]);
    assert!(text.contains("PASS labelling realises the biased graph"));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "f", "--k", "2"]);
    let a = ok(d, &["certify", "F-k2.biased", "--out", "a.cert"]);
    let b = ok(d, &["certify", "F-k2.biased", "--out", "b.cert"]);
    assert_eq!(a.replace("a.cert", ""), b.replace("b.cert", ""));
    assert_eq!(
        fs::read(d.join("a.cert")).unwrap(),
        fs::read(d.join("b.cert")).unwrap()
    );
}
