use std::io::Write;
use std::process::{Command, Output, Stdio};

const K4E: &str = r#"{"kind":"graphic","vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","a"],["c","d"],["d","a"]]}"#;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_matroid-decomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decompose_from_stdin() {
    let out = run(&["decompose"], K4E);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let kinds: Vec<&str> = v["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["torso"]["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, vec!["circuit", "circuit", "cocircuit"]);
    assert_eq!(v["adhesion"], 2);
    assert_eq!(v["irredundant"], true);
}

#[test]
fn dot_is_a_tree() {
    let out = run(&["decompose", "--format", "dot", "-"], K4E);
    let text = stdout(&out);
    let nodes = text
        .lines()
        .filter(|l| l.trim_start().starts_with('n') && !l.contains("--"))
        .count();
    let edges = text.lines().filter(|l| l.contains(" -- ")).count();
    assert_eq!(nodes, edges + 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["info"], "not json").status.code(), Some(2));
    let bad =
        r#"{"kind":"circuits","ground":["a","b","c","d"],"circuits":[["a","b"],["b","c","d"]]}"#;
    let out = run(&["verify"], bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("C3"));
    // the same family is accepted when only the antichain axioms are checked
    assert_ne!(
        run(&["info", "--validate", "antichain"], bad).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["decompose"], r#"{"kind":"uniform","r":1,"n":2}"#)
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(
            &["separations", "--cap", "6"],
            r#"{"kind":"uniform","r":3,"n":7}"#
        )
        .status
        .code(),
        Some(5)
    );
}

#[test]
fn verify_and_dual_wrapper() {
    let out = run(&["verify", "--suite", "all", "--seed", "3"], K4E);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("checks passed"));
    let dual = format!(r#"{{"dual":{K4E}}}"#);
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["decompose"], &dual))).unwrap();
    let kinds: Vec<&str> = v["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["torso"]["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, vec!["cocircuit", "cocircuit", "circuit"]);
}

#[test]
fn info_text() {
    let out = run(&["info"], r#"{"kind":"uniform","r":2,"n":4}"#);
    assert_eq!(
        stdout(&out),
        "elements: 4\nrank: 2\ncircuits: 4\nconnected: true\n3-connected: true\n"
    );
}
