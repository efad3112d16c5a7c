//! The `matroid-decomp` command line.

mod report;
mod spec;

use std::fmt::Write;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::connectivity::{enumerate_2separations, enumerate_separations, is_n_connected};
use crate::decomposition::build_tree;
use crate::error::Error;
use crate::lemmas::{run_suite, Suite};
use crate::matroid::{Matroid, ValidationLevel, DEFAULT_CAP};
use crate::separation::is_good;

pub use report::{DecompositionReport, EdgeReport, NodeReport, TorsoReport};
pub use spec::{MatroidSpec, PlainSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LEMMA: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_TOO_SMALL: i32 = 4;
pub const EXIT_OVER_CAP: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "matroid-decomp",
    version,
    about = "Connectivity, 2-separations and canonical decompositions of finite matroids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Largest ground set for operations that enumerate subsets.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Circuit axioms checked when reading the input.
    #[arg(long, global = true, default_value = "full", value_parser = parse_level)]
    pub validate: ValidationLevel,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

fn parse_level(s: &str) -> Result<ValidationLevel, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, rank, circuit count and connectivity.
    Info {
        /// JSON spec file; stdin when absent or "-".
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InfoFormat::Text)]
        format: InfoFormat,
    },
    /// Separations of a given order as JSON.
    Separations {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Only 2-separations nested with every other 2-separation.
        #[arg(long)]
        good_only: bool,
    },
    /// The canonical tree-decomposition.
    Decompose {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = DecomposeFormat::Json)]
        format: DecomposeFormat,
    },
    /// Runs a verification suite.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InfoFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecomposeFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemmas,
    Duality,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Duality => Suite::Duality,
            SuiteArg::All => Suite::All,
        }
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(err: &Error) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: exit_code(err),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::AxiomViolation { .. }
        | Error::DuplicateElement(_)
        | Error::UnknownElement(_)
        | Error::InvalidParams(_)
        | Error::UnknownVertex(_)
        | Error::InvalidMatrix(_) => EXIT_PARSE,
        Error::Disconnected => EXIT_DISCONNECTED,
        Error::TooSmall => EXIT_TOO_SMALL,
        Error::GroundSetTooLarge { .. } => EXIT_OVER_CAP,
        _ => EXIT_LEMMA,
    }
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Runs a parsed command line, reading the spec from `stdin` when no file is given.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let input = match &cli.command {
        Command::Info { input, .. }
        | Command::Separations { input, .. }
        | Command::Decompose { input, .. }
        | Command::Verify { input, .. } => input.as_ref(),
    };
    let text = match read_input(input, stdin) {
        Ok(t) => t,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: EXIT_PARSE,
            }
        }
    };
    let spec = match MatroidSpec::parse(&text) {
        Ok(s) => s,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: invalid matroid spec: {e}\n"),
                code: EXIT_PARSE,
            }
        }
    };
    let m = match spec.build(cli.validate) {
        Ok(m) => m.with_cap(cli.cap),
        Err(e) => return Outcome::error(&e),
    };
    let result = match &cli.command {
        Command::Info { format, .. } => return info(&m, *format),
        Command::Separations { k, good_only, .. } => separations(&m, *k, *good_only),
        Command::Decompose { format, .. } => decompose(&m, *format),
        Command::Verify { suite, .. } => return verify(&m, (*suite).into(), cli.seed),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::error(&e),
    }
}

#[derive(Serialize)]
struct Info {
    elements: usize,
    rank: usize,
    circuits: usize,
    connected: bool,
    three_connected: bool,
}

/// Prints the summary even for a disconnected matroid, then exits with the
/// disconnected code.
fn info(m: &Matroid, format: InfoFormat) -> Outcome {
    let three_connected = match is_n_connected(m, 3) {
        Ok(b) => b,
        Err(e) => return Outcome::error(&e),
    };
    let i = Info {
        elements: m.len(),
        rank: m.rank(m.ground()),
        circuits: m.circuits().len(),
        connected: m.is_connected(),
        three_connected,
    };
    let stdout = match format {
        InfoFormat::Json => serde_json::to_string_pretty(&i).expect("plain struct") + "\n",
        InfoFormat::Text => format!(
            "elements: {}\nrank: {}\ncircuits: {}\nconnected: {}\n3-connected: {}\n",
            i.elements, i.rank, i.circuits, i.connected, i.three_connected
        ),
    };
    if i.connected {
        Outcome::ok(stdout)
    } else {
        Outcome {
            stdout,
            stderr: format!("error: {}\n", Error::Disconnected),
            code: EXIT_DISCONNECTED,
        }
    }
}

#[derive(Serialize)]
struct SeparationReport {
    side: Vec<String>,
    complement: Vec<String>,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    good: Option<bool>,
}

fn separations(m: &Matroid, k: usize, good_only: bool) -> crate::Result<String> {
    if k == 0 {
        return Err(Error::InvalidParams(
            "separation order must be at least 1".into(),
        ));
    }
    if good_only && k != 2 {
        return Err(Error::InvalidParams(
            "--good-only applies to 2-separations".into(),
        ));
    }
    let seps = enumerate_separations(m, k)?;
    let all2 = if k == 2 {
        seps.clone()
    } else {
        enumerate_2separations(m)?
    };
    let list: Vec<SeparationReport> = seps
        .iter()
        .map(|s| SeparationReport {
            side: m.labels_of(s.side_a),
            complement: m.labels_of(s.side_b),
            order: s.order,
            good: (k == 2).then(|| is_good(s, &all2)),
        })
        .filter(|r| !good_only || r.good == Some(true))
        .collect();
    Ok(serde_json::to_string_pretty(&list).expect("plain struct") + "\n")
}

fn decompose(m: &Matroid, format: DecomposeFormat) -> crate::Result<String> {
    let dt = build_tree(m)?;
    let report = DecompositionReport::new(m, &dt)?;
    Ok(match format {
        DecomposeFormat::Json => report.to_json() + "\n",
        DecomposeFormat::Dot => report.to_dot(),
    })
}

fn verify(m: &Matroid, suite: Suite, seed: u64) -> Outcome {
    match run_suite(m, suite, seed) {
        Ok(checks) => {
            let mut out = String::new();
            for c in &checks {
                let _ = writeln!(out, "pass  {} ({} cases)", c.name, c.cases);
            }
            let _ = writeln!(out, "all {} checks passed", checks.len());
            Outcome::ok(out)
        }
        Err(e) => Outcome {
            stdout: format!("FAIL  {e}\n"),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], input: &str) -> Outcome {
        let mut argv = vec!["matroid-decomp"];
        argv.extend_from_slice(args);
        let cli = Cli::try_parse_from(argv).unwrap();
        execute(&cli, &mut input.as_bytes())
    }

    const K4E: &str = r#"{"kind":"graphic","vertices":["a","b","c","d"],
        "edges":[["a","b"],["b","c"],["c","a"],["c","d"],["d","a"]]}"#;

    #[test]
    fn info_reports() {
        let out = run(&["info"], r#"{"kind":"uniform","r":2,"n":4}"#);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("3-connected: true"));
        let tri = run(
            &["info"],
            r#"{"kind":"graphic","vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["c","a"]]}"#,
        );
        assert!(tri.stdout.contains("rank: 2"));
        assert_eq!(run(&["info"], "{not json").code, EXIT_PARSE);
        let split = run(&["info"], r#"{"kind":"gf2","columns":[[1,0],[0,1]]}"#);
        assert_eq!(split.code, EXIT_DISCONNECTED);
        assert!(split.stdout.contains("connected: false"));
    }

    #[test]
    fn separation_listing() {
        let out = run(&["separations"], K4E);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert!(v.as_array().unwrap().iter().all(|s| s["good"] == true));
        let u34 = run(
            &["separations", "--good-only"],
            r#"{"kind":"uniform","r":3,"n":4}"#,
        );
        assert_eq!(u34.stdout.trim(), "[]");
        let u24 = run(&["separations"], r#"{"kind":"uniform","r":2,"n":4}"#);
        assert_eq!(u24.stdout.trim(), "[]");
        assert_eq!(
            run(&["separations", "--k", "3", "--good-only"], K4E).code,
            EXIT_PARSE
        );
    }

    #[test]
    fn decompose_outputs() {
        let out = run(&["decompose"], K4E);
        assert_eq!(out.code, 0);
        let r: DecompositionReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(r.nodes.len(), 3);
        let dot = run(&["decompose", "--format", "dot"], K4E);
        assert_eq!(dot.stdout.matches(" -- ").count(), 2);
        assert_eq!(
            run(&["decompose"], r#"{"kind":"uniform","r":1,"n":2}"#).code,
            EXIT_TOO_SMALL
        );
        assert_eq!(
            run(
                &["decompose"],
                r#"{"kind":"gf2","columns":[[1,0,0],[0,1,0],[1,1,0],[0,0,1]]}"#
            )
            .code,
            EXIT_DISCONNECTED
        );
        assert_eq!(
            run(
                &["decompose", "--cap", "5"],
                r#"{"kind":"uniform","r":2,"n":6}"#
            )
            .code,
            EXIT_OVER_CAP
        );
    }

    #[test]
    fn verify_suites() {
        let out = run(&["verify", "--suite", "duality"], K4E);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("decomposition of the dual"));
        let bad = run(
            &["verify"],
            r#"{"kind":"circuits","ground":["a","b","c","d"],"circuits":[["a","b"],["b","c","d"]]}"#,
        );
        assert_eq!(bad.code, EXIT_PARSE);
        assert!(bad.stderr.contains("C3"));
    }
}
