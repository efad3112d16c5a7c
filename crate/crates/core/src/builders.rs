//! Fixture generators: graphic and binary matroids.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, DEFAULT_CAP};
use crate::subset::{k_subsets, Subset, MAX_GROUND};

/// The cycle matroid of a multigraph. Edge `i` gets the label `"i"`.
///
/// Loops and parallel edges are allowed; circuits are the edge sets of
/// simple cycles.
pub fn graphic<V: AsRef<str>>(vertices: &[V], edges: &[(V, V)]) -> Result<Matroid> {
    let labels: Vec<String> = (0..edges.len()).map(|i| i.to_string()).collect();
    graphic_labeled(vertices, edges, labels)
}

/// Like [`graphic`], with explicit edge labels.
pub fn graphic_labeled<V: AsRef<str>>(
    vertices: &[V],
    edges: &[(V, V)],
    labels: Vec<String>,
) -> Result<Matroid> {
    if edges.len() > MAX_GROUND {
        return Err(Error::InvalidParams(format!(
            "{} edges exceed the supported {MAX_GROUND}",
            edges.len()
        )));
    }
    if labels.len() != edges.len() {
        return Err(Error::InvalidParams("one label per edge required".into()));
    }
    let vix: HashMap<&str, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_ref(), i))
        .collect();
    let lookup = |v: &V| {
        vix.get(v.as_ref())
            .copied()
            .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))
    };
    let mut ends = Vec::with_capacity(edges.len());
    for (u, v) in edges {
        ends.push((lookup(u)?, lookup(v)?));
    }
    let circuits = simple_cycles(vertices.len(), &ends);
    Matroid::from_circuits(labels, circuits, crate::ValidationLevel::None)
}

/// Edge sets of all simple cycles of a multigraph.
fn simple_cycles(nv: usize, ends: &[(usize, usize)]) -> Vec<Subset> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    let mut found = BTreeSet::new();
    for (e, &(u, v)) in ends.iter().enumerate() {
        if u == v {
            found.insert(Subset::singleton(e).0);
        } else {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }
    // each cycle is rooted at its least vertex and walked over larger vertices only
    for start in 0..nv {
        let mut on_path = vec![false; nv];
        on_path[start] = true;
        walk(start, start, Subset::EMPTY, &adj, &mut on_path, &mut found);
    }
    found.into_iter().map(Subset).collect()
}

fn walk(
    start: usize,
    at: usize,
    used: Subset,
    adj: &[Vec<(usize, usize)>],
    on_path: &mut [bool],
    found: &mut BTreeSet<u64>,
) {
    for &(next, e) in &adj[at] {
        if used.contains(e) {
            continue;
        }
        if next == start {
            if !used.is_empty() {
                found.insert(used.with(e).0);
            }
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            walk(start, next, used.with(e), adj, on_path, found);
            on_path[next] = false;
        }
    }
}

/// The binary matroid of the given columns; column `i` gets the label `"i"`.
///
/// Entries must be 0 or 1 and all columns must have the same length.
pub fn linear_gf2(columns: &[Vec<u8>]) -> Result<Matroid> {
    let n = columns.len();
    if n > DEFAULT_CAP {
        return Err(Error::GroundSetTooLarge {
            size: n,
            cap: DEFAULT_CAP,
        });
    }
    let rows = columns.first().map_or(0, Vec::len);
    if rows > 64 {
        return Err(Error::InvalidMatrix(format!("{rows} rows exceed 64")));
    }
    let mut packed = Vec::with_capacity(n);
    for (j, col) in columns.iter().enumerate() {
        if col.len() != rows {
            return Err(Error::InvalidMatrix(format!(
                "column {j} has length {}, expected {rows}",
                col.len()
            )));
        }
        let mut bits = 0u64;
        for (i, &b) in col.iter().enumerate() {
            match b {
                0 => {}
                1 => bits |= 1 << i,
                other => {
                    return Err(Error::InvalidMatrix(format!(
                        "entry {other} in column {j} is not a bit"
                    )))
                }
            }
        }
        packed.push(bits);
    }
    // Over GF(2) a circuit is a minimal set of columns summing to zero,
    // so scanning by size and discarding supersets of earlier finds suffices.
    let mut circuits: Vec<Subset> = Vec::new();
    for k in 1..=n {
        for s in k_subsets(n, k) {
            if s.iter().fold(0u64, |acc, j| acc ^ packed[j]) == 0
                && !circuits.iter().any(|c| c.is_subset(s))
            {
                circuits.push(s);
            }
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Matroid::from_circuits(labels, circuits, crate::ValidationLevel::None)
}

/// The graphic matroid of K4 minus an edge, edges `0=ab, 1=bc, 2=ca, 3=cd, 4=da`.
pub fn k4_minus_edge() -> Matroid {
    graphic(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "a")],
    )
    .expect("fixed fixture")
}

/// The cycle matroid of the `n`-cycle, i.e. `U(n-1, n)` with labels `0..n-1`.
pub fn cycle_graph(n: usize) -> Result<Matroid> {
    let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let es: Vec<(String, String)> = (0..n)
        .map(|i| (vs[i].clone(), vs[(i + 1) % n].clone()))
        .collect();
    graphic(&vs, &es)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn triangle() {
        let m = graphic(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert_eq!(m.circuits(), &[s(&[0, 1, 2])]);
    }

    #[test]
    fn k4_minus_edge_cycles() {
        let m = k4_minus_edge();
        assert_eq!(
            m.circuits(),
            &[s(&[0, 1, 2]), s(&[2, 3, 4]), s(&[0, 1, 3, 4])]
        );
    }

    #[test]
    fn parallel_edges_and_loops() {
        let m = graphic(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(m.circuits(), &[s(&[0, 1])]);
        let m = graphic(&["a", "b"], &[("a", "a"), ("a", "b")]).unwrap();
        assert_eq!(m.circuits(), &[s(&[0])]);
        assert_eq!(m.loops(), s(&[0]));
        assert_eq!(m.coloops(), s(&[1]));
    }

    #[test]
    fn unknown_vertex() {
        let err = graphic(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownVertex("z".into()));
    }

    #[test]
    fn k4_has_seven_cycles() {
        let vs = ["a", "b", "c", "d"];
        let es = [
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ];
        let m = graphic(&vs, &es).unwrap();
        // four triangles and three 4-cycles
        assert_eq!(m.circuits().len(), 7);
        assert_eq!(m.circuits().iter().filter(|c| c.len() == 3).count(), 4);
    }

    #[test]
    fn binary_examples() {
        let m = linear_gf2(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.circuits(), &[s(&[0, 1, 2])]);
        let m = linear_gf2(&[vec![1], vec![1]]).unwrap();
        assert_eq!(m.circuits(), &[s(&[0, 1])]);
        let m = linear_gf2(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(m.circuits().is_empty());
        let m = linear_gf2(&[vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(m.loops(), s(&[0]));
    }

    #[test]
    fn bad_matrices() {
        assert!(matches!(
            linear_gf2(&[vec![1, 0], vec![1]]),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(matches!(
            linear_gf2(&[vec![2]]),
            Err(Error::InvalidMatrix(_))
        ));
    }
}
