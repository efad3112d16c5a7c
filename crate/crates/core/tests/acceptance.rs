//! One line per acceptance criterion. Runs without the test harness so the
//! lines are always printed; exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use matroid_decomp::builders::k4_minus_edge;
use matroid_decomp::connectivity::{enumerate_2separations, is_n_connected};
use matroid_decomp::decomposition::{
    brute_force_decompositions, build_tree, decompositions_isomorphic, irredundant_decompositions,
    is_primitive, isomorphism_classes, reassemble, verify_primitive_structure, TorsoKind,
};
use matroid_decomp::fixtures::{connected_corpus, corpus, Fixture};
use matroid_decomp::lemmas::{
    connectivity_checks, duality_checks, localization_checks, separation_lemmas, Check,
};
use matroid_decomp::localization::{split_along, two_sum};
use matroid_decomp::separation::good_2separations;
use matroid_decomp::{Matroid, Subset};

type Outcome = Result<String, String>;

struct Report {
    failed: usize,
}

impl Report {
    fn run(&mut self, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {took:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS  {name}: {detail} [{took:.2?}]"),
            Err(why) => {
                self.failed += 1;
                println!("FAIL  {name}: {why} [{took:.2?}]");
            }
        }
    }
}

fn total(checks: &[Check]) -> usize {
    checks.iter().map(|c| c.cases).sum()
}

fn over(
    fixtures: &[Fixture],
    f: impl Fn(&Matroid) -> matroid_decomp::Result<Vec<Check>>,
) -> Result<usize, String> {
    let mut cases = 0;
    for fx in fixtures {
        cases += total(&f(&fx.matroid).map_err(|e| format!("{}: {e}", fx.name))?);
    }
    Ok(cases)
}

fn k4e() -> Outcome {
    let m = k4_minus_edge();
    // oracle: all 2^5 subsets by brute-force rank, then the torso formula
    let seps = common::two_separations(&m);
    let good = common::good_separations(&m);
    if seps != vec![0b00011, 0b00111] || good != seps {
        return Err(format!(
            "brute force finds 2-separations {seps:?}, good {good:?}"
        ));
    }
    let dt = build_tree(&m).map_err(|e| e.to_string())?;
    let path_ok = dt.node_count() == 3
        && dt.tree.edges.len() == 2
        && (0..3).filter(|&v| dt.tree.degree(v) == 1).count() == 2;
    if !path_ok {
        return Err(format!("tree {:?} is not a 3-node path", dt.tree.edges));
    }
    let mut parts: Vec<Vec<usize>> = dt.tree.parts.iter().map(|p| p.to_vec()).collect();
    parts.sort();
    if parts != vec![vec![0, 1], vec![2], vec![3, 4]] {
        return Err(format!("parts {parts:?}"));
    }
    let middle = (0..3).find(|&v| dt.tree.degree(v) == 2).unwrap();
    let ends: Vec<usize> = (0..3).filter(|&v| v != middle).collect();
    let kinds = [dt.kinds[ends[0]], dt.kinds[middle], dt.kinds[ends[1]]];
    if kinds != [TorsoKind::Circuit, TorsoKind::Cocircuit, TorsoKind::Circuit] {
        return Err(format!("kinds along the path {kinds:?}"));
    }
    for v in 0..3 {
        let (ground, circuits) = common::torso(&m, &dt.tree.parts, &dt.tree.edges, v);
        if dt.torsos[v].labels() != ground.as_slice()
            || common::circuit_family(&dt.torsos[v]) != circuits
        {
            return Err(format!("torso {v} differs from the formula"));
        }
    }
    Ok("path {0,1} - {2} - {3,4}, circuit - cocircuit - circuit".into())
}

fn uniform_four() -> Outcome {
    let mut out = Vec::new();
    for (r, kind, seps) in [
        (2, TorsoKind::ThreeConnected, 0),
        (3, TorsoKind::Circuit, 3),
        (1, TorsoKind::Cocircuit, 3),
    ] {
        let m = Matroid::uniform(r, 4).unwrap();
        let brute = common::two_separations(&m).len();
        let found = enumerate_2separations(&m).map_err(|e| e.to_string())?.len();
        let good = good_2separations(&m).map_err(|e| e.to_string())?.len();
        let dt = build_tree(&m).map_err(|e| e.to_string())?;
        if brute != seps || found != seps || good != 0 || dt.kinds != vec![kind] {
            return Err(format!(
                "U({r},4): {found} 2-separations (brute force {brute}), {good} good, kinds {:?}",
                dt.kinds
            ));
        }
        out.push(format!("U({r},4) {kind:?} with {seps} 2-separations"));
    }
    Ok(out.join(", "))
}

fn round_trips(fixtures: &[Fixture]) -> Outcome {
    let (mut splits, mut trees) = (0, 0);
    for f in fixtures {
        let m = &f.matroid;
        for s in enumerate_2separations(m).map_err(|e| e.to_string())? {
            let (m1, m2, e) = split_along(m, &s).map_err(|e| format!("{}: {e}", f.name))?;
            let back = two_sum(&m1, &m2, &e).map_err(|e| format!("{}: {e}", f.name))?;
            if common::circuit_family(&back) != common::circuit_family(m) {
                return Err(format!(
                    "{}: split along {:?} does not sum back",
                    f.name, s.side_a
                ));
            }
            splits += 1;
        }
        let whole =
            reassemble(&build_tree(m).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if common::circuit_family(&whole) != common::circuit_family(m) {
            return Err(format!("{}: torsos do not reassemble", f.name));
        }
        trees += 1;
    }
    Ok(format!(
        "{splits} split/2-sum round trips, {trees} reassembled trees"
    ))
}

fn duality(fixtures: &[Fixture], seed: u64) -> Outcome {
    let cases = over(fixtures, |m| duality_checks(m, seed))?;
    let mut swapped = 0;
    for f in fixtures
        .iter()
        .filter(|f| f.matroid.len() >= 3 && f.matroid.is_connected())
    {
        let count = |kinds: &[TorsoKind]| {
            let mut c = BTreeMap::new();
            for k in kinds {
                *c.entry(*k).or_insert(0) += 1;
            }
            c
        };
        let a = build_tree(&f.matroid).map_err(|e| e.to_string())?;
        let b = build_tree(&f.matroid.dual().unwrap()).map_err(|e| e.to_string())?;
        let dual_kinds: Vec<TorsoKind> = a.kinds.iter().map(|k| k.dual()).collect();
        if count(&dual_kinds) != count(&b.kinds) {
            return Err(format!(
                "{}: kinds {:?} vs dual {:?}",
                f.name, a.kinds, b.kinds
            ));
        }
        swapped += 1;
    }
    Ok(format!(
        "{cases} cases, kind multisets swap on {swapped} fixtures"
    ))
}

fn uniqueness(fixtures: &[Fixture]) -> Outcome {
    let mut checked = 0;
    let mut found_total = 0;
    let mut brute_checked = 0;
    for f in fixtures.iter().filter(|f| f.matroid.len() <= 7) {
        let m = &f.matroid;
        let found = irredundant_decompositions(m).map_err(|e| format!("{}: {e}", f.name))?;
        let classes = isomorphism_classes(&found);
        let canonical = build_tree(m).map_err(|e| e.to_string())?;
        if classes.len() != 1
            || decompositions_isomorphic(&found[classes[0][0]], &canonical.tree).is_none()
        {
            return Err(format!("{}: {} classes", f.name, classes.len()));
        }
        if m.len() <= 5 {
            let brute = brute_force_decompositions(m).map_err(|e| format!("{}: {e}", f.name))?;
            if brute.len() != 1 || decompositions_isomorphic(&brute[0], &canonical.tree).is_none() {
                return Err(format!(
                    "{}: brute force finds {} classes",
                    f.name,
                    brute.len()
                ));
            }
            brute_checked += 1;
        }
        checked += 1;
        found_total += found.len();
    }
    Ok(format!(
        "{checked} fixtures, {found_total} decompositions, one class each; brute force agrees on {brute_checked}"
    ))
}

/// Connected fixtures on at most seven elements, their torsos, and their
/// connected single-element deletions and contractions.
fn generated() -> Vec<Matroid> {
    let mut out = Vec::new();
    for f in connected_corpus() {
        let m = f.matroid;
        for t in build_tree(&m).unwrap().torsos {
            out.push(t);
        }
        for e in 0..m.len() {
            out.push(m.deletion(Subset::singleton(e)));
            out.push(m.contraction(Subset::singleton(e)).unwrap());
        }
        out.push(m);
    }
    out.retain(|m| m.len() >= 3 && m.len() <= 7 && m.is_connected());
    out
}

fn trichotomy() -> Outcome {
    let (mut primitive, mut size3) = (0, 0);
    for m in generated() {
        if !is_primitive(&m).map_err(|e| e.to_string())? {
            continue;
        }
        let three = is_n_connected(&m, 3).map_err(|e| e.to_string())?;
        let circuit = m.is_circuit_matroid();
        let cocircuit = m.dual().unwrap().is_circuit_matroid();
        let holds = [three, circuit, cocircuit].iter().filter(|&&b| b).count();
        if m.len() == 3 {
            // U(2,3) and U(1,3) are also 3-connected; circuit or cocircuit decides
            if circuit == cocircuit {
                return Err(format!("three-element primitive {:?}", m.circuits()));
            }
            size3 += 1;
        } else if holds != 1 {
            return Err(format!(
                "{:?}: 3-connected {three}, circuit {circuit}, cocircuit {cocircuit}",
                m.circuits()
            ));
        }
        verify_primitive_structure(&m).map_err(|e| e.to_string())?;
        primitive += 1;
    }
    Ok(format!(
        "{primitive} primitive matroids ({size3} on three elements), exactly one kind each"
    ))
}

fn cli_determinism() -> Outcome {
    let dir =
        std::env::temp_dir().join(format!("matroid-decomp-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("k4e.json");
    std::fs::write(
        &path,
        r#"{"kind":"graphic","vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","a"],["c","d"],["d","a"]]}"#,
    )
    .map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for _ in 0..10 {
        let out = Command::new(env!("CARGO_BIN_EXE_matroid-decomp"))
            .arg("decompose")
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit {:?}", out.status.code()));
        }
        outputs.push(out.stdout);
    }
    let _ = std::fs::remove_dir_all(&dir);
    if outputs.iter().any(|o| *o != outputs[0]) {
        return Err("outputs differ".into());
    }
    Ok(format!("10 identical runs of {} bytes", outputs[0].len()))
}

fn main() {
    let seed = 0x5eed;
    let all = corpus();
    let connected = connected_corpus();
    let mut r = Report { failed: 0 };
    println!(
        "corpus: {} fixtures, {} connected with at least three elements",
        all.len(),
        connected.len()
    );

    r.run(
        "K4-e canonical decomposition",
        Some(Duration::from_secs(1)),
        k4e,
    );
    r.run("U(2,4), U(3,4), U(1,4)", None, uniform_four);
    r.run(
        "separation lemma suite",
        Some(Duration::from_secs(120)),
        || over(&all, separation_lemmas).map(|c| format!("{c} cases")),
    );
    r.run("submodularity, rank identity, del invariance", None, || {
        over(&all, |m| connectivity_checks(m, seed)).map(|c| format!("{c} cases"))
    });
    r.run("localization suite", None, || {
        over(&all, localization_checks).map(|c| format!("{c} cases"))
    });
    r.run("round trips and reassembly", None, || {
        round_trips(&connected)
    });
    r.run("duality", None, || duality(&all, seed));
    r.run("uniqueness", Some(Duration::from_secs(300)), || {
        uniqueness(&connected)
    });
    r.run("primitivity trichotomy", None, trichotomy);
    r.run("CLI determinism", None, cli_determinism);

    if r.failed > 0 {
        println!("{} criteria failed", r.failed);
        std::process::exit(1);
    }
}
