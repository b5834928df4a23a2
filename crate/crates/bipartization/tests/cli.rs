//! End-to-end tests of the command-line interface, covering every
//! documented exit code: 0 success, 1 negative verdict, 2 input error,
//! 3 size limit.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bipartization"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("bipartization-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn bipartize_prints_graph6_and_dot() {
    let graph = write_temp("paw.edges", "4\n0 1\n0 2\n1 2\n2 3\n");
    let weights = write_temp("paw.weights", "0,1,2 : 1\n2,3 : 1\n1 : 2\n");
    let dot = std::env::temp_dir().join(format!("bipartization-cli-{}.dot", std::process::id()));
    let out = bin()
        .args(["bipartize", "-g"])
        .arg(&graph)
        .arg("-f")
        .arg(&weights)
        .arg("--dot")
        .arg(&dot)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    // 4 + (1 + 1 + 2) vertices; graph6 for n = 8 starts with 'G'.
    let g6 = stdout(&out);
    assert!(g6.trim().starts_with('G'), "unexpected output {g6:?}");
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.contains("graph"));
    assert!(dot_text.contains("--"));
}

#[test]
fn invert_roundtrips_through_bipartize() {
    // Start from a weighted path, expand, then invert the expansion.
    let graph = write_temp("p3.edges", "3\n0 1\n1 2\n");
    let weights = write_temp("p3.weights", "0,1 : 1\n1,2 : 2\n");
    let out = bin()
        .args(["bipartize", "-g"])
        .arg(&graph)
        .arg("-f")
        .arg(&weights)
        .output()
        .unwrap();
    assert!(out.status.success());
    let g6 = stdout(&out).trim().to_string();

    let mut child = bin()
        .args(["invert", "-g", "-", "--side", "a"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(g6.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("3\n"), "host edge list first: {text}");
    assert!(text.contains(": 2"), "doubled edge weight survives: {text}");
}

#[test]
fn check_tree_exit_codes() {
    let graph = write_temp("tree-host.edges", "3\n0 1\n1 2\n");
    let yes = write_temp("tree-yes.weights", "0,1 : 1\n1,2 : 1\n");
    let no = write_temp("tree-no.weights", "0,1 : 2\n1,2 : 1\n");

    let out = bin()
        .args(["check-tree", "-g"])
        .arg(&graph)
        .arg("-f")
        .arg(&yes)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("tree: yes"));

    let out = bin()
        .args(["check-tree", "-g"])
        .arg(&graph)
        .arg("-f")
        .arg(&no)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("tree: no"));
    assert!(text.contains("violation:"));
}

#[test]
fn gamma_beta_matching_known_values() {
    // K_{3,3} in graph6.
    let k33 = write_temp("k33.g6", "EFz_\n");
    let out = bin().args(["gamma", "-g"]).arg(&k33).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("gamma: 2"));

    let out = bin().args(["beta", "-g"]).arg(&k33).output().unwrap();
    assert!(stdout(&out).contains("beta: 3"));

    let out = bin().args(["matching", "-g"]).arg(&k33).output().unwrap();
    assert!(stdout(&out).contains("matching: 3"));

    // P_4 in graph6.
    let p4 = write_temp("p4.g6", "Ch\n");
    let out = bin().args(["gamma", "-g"]).arg(&p4).output().unwrap();
    assert!(stdout(&out).contains("gamma: 2"));
    let out = bin().args(["beta", "-g"]).arg(&p4).output().unwrap();
    assert!(stdout(&out).contains("beta: 2"));
}

#[test]
fn classify_exit_reflects_family_membership() {
    // C_4 lies in the family (γ = 2 = |A|).
    let c4 = write_temp("c4.g6", "Cr\n");
    let out = bin().args(["classify", "-g"]).arg(&c4).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("in_family_b: true"), "{text}");

    // K_{3,3} does not (γ = 2 < 3 = |A|).
    let k33 = write_temp("k33b.g6", "EFz_\n");
    let out = bin().args(["classify", "-g"]).arg(&k33).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("in_family_b: false"), "{text}");
    assert!(text.contains("gamma: 2"), "{text}");
}

#[test]
fn input_errors_exit_2() {
    let bad = write_temp("bad.g6", "D\u{1}c\n");
    let out = bin().args(["gamma", "-g"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));

    let missing = std::env::temp_dir().join("bipartization-cli-definitely-missing");
    let out = bin().args(["gamma", "-g"]).arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Weighting key that is not a clique of the host.
    let graph = write_temp("path.edges", "3\n0 1\n1 2\n");
    let weights = write_temp("bad.weights", "0,2 : 1\n");
    let out = bin()
        .args(["check-tree", "-g"])
        .arg(&graph)
        .arg("-f")
        .arg(&weights)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn size_limit_exit_3() {
    // A graph6 header for n = 300000 exceeds the supported limit.
    let out = bin()
        .args(["verify", "--suite", "lemma5", "--max-n", "30"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(stderr(&out).contains("size limit"));
}

#[test]
fn verify_single_suite_and_corpus() {
    let out = bin()
        .args(["verify", "--suite", "lemma4", "--max-n", "5", "--workers", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("suite lemma4: checked"));
    assert!(text.contains("total failures: 0"));

    // Corpus mode over standard input.
    let mut child = bin()
        .args(["verify", "--suite", "thm2", "--corpus", "-", "--workers", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"Cr\nEFz_\nCh\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("suite thm2: checked 3"));

    let out = bin()
        .args(["verify", "--suite", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
