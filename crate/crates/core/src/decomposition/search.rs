//! Exhaustive searches for irredundant decompositions of small matroids.

use crate::connectivity::{enumerate_2separations, separation_of, Separation};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

use super::verify::{decompositions_isomorphic, is_irredundant};
use super::{is_primitive, torso_by_formula, tree_from_nested, OrientedSep, TreeDecomposition};

/// Largest ground set for [`irredundant_decompositions`].
pub const SEARCH_LIMIT: usize = 7;
/// Largest ground set for [`brute_force_decompositions`].
pub const BRUTE_FORCE_LIMIT: usize = 5;

fn check_search_input(m: &Matroid, limit: usize) -> Result<()> {
    if m.len() > limit {
        return Err(Error::GroundSetTooLarge {
            size: m.len(),
            cap: limit,
        });
    }
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    if m.len() < 3 {
        return Err(Error::TooSmall);
    }
    Ok(())
}

/// Whether `td` is an irredundant tree-decomposition of uniform adhesion 2
/// whose torsos are all primitive.
pub fn is_irredundant_primitive(m: &Matroid, td: &TreeDecomposition) -> Result<bool> {
    if td.check(m.ground()).is_err() {
        return Ok(false);
    }
    for e in 0..td.edges.len() {
        if separation_of(m, td.side(e, td.edges[e].0)).map(|s| s.order) != Some(2) {
            return Ok(false);
        }
    }
    if !is_irredundant(m, td)? {
        return Ok(false);
    }
    for v in 0..td.node_count() {
        let t = torso_by_formula(m, td, v)?;
        if !t.is_connected() || !is_primitive(&t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every irredundant decomposition of uniform adhesion 2 with primitive
/// torsos that arises as `T_F` for a pairwise nested set `F` of
/// 2-separations. Connected matroids on at most seven elements only.
pub fn irredundant_decompositions(m: &Matroid) -> Result<Vec<TreeDecomposition>> {
    check_search_input(m, SEARCH_LIMIT)?;
    let all = enumerate_2separations(m)?;
    let k = all.len();
    let nested: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| OrientedSep::of(&all[i]).nested_with(&OrientedSep::of(&all[j])))
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    search(m, &all, &nested, 0, &mut chosen, &mut found)?;
    Ok(found)
}

fn search(
    m: &Matroid,
    all: &[Separation],
    nested: &[Vec<bool>],
    from: usize,
    chosen: &mut Vec<usize>,
    found: &mut Vec<TreeDecomposition>,
) -> Result<()> {
    let family: Vec<Separation> = chosen.iter().map(|&i| all[i]).collect();
    if let Ok((td, _, _)) = tree_from_nested(m.ground(), &family) {
        if is_irredundant_primitive(m, &td)? {
            found.push(td);
        }
    }
    for next in from..all.len() {
        if chosen.iter().all(|&c| nested[c][next]) {
            chosen.push(next);
            search(m, all, nested, next + 1, chosen, found)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Groups decompositions into isomorphism classes (lists of indices).
pub fn isomorphism_classes(tds: &[TreeDecomposition]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, td) in tds.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| decompositions_isomorphic(&tds[c[0]], td).is_some())
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

/// Labelled tree on `k` nodes from a Prüfer sequence of length `k - 2`.
fn prufer_edges(seq: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; k];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &x in seq {
        let leaf = (0..k).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Base-`k` counter over `len` digits.
fn next_word(word: &mut [usize], k: usize) -> bool {
    for d in word.iter_mut() {
        *d += 1;
        if *d < k {
            return true;
        }
        *d = 0;
    }
    false
}

/// One representative per isomorphism class of irredundant decompositions
/// of uniform adhesion 2 with primitive torsos, found by trying every
/// labelled tree and every assignment of elements to its nodes.
///
/// Connected matroids on at most five elements only. With so few elements
/// every part of such a decomposition is nonempty (an empty part needs
/// three branches of at least two elements each), so trees on at most
/// `|E|` nodes suffice.
pub fn brute_force_decompositions(m: &Matroid) -> Result<Vec<TreeDecomposition>> {
    check_search_input(m, BRUTE_FORCE_LIMIT)?;
    let n = m.len();
    let mut reps: Vec<TreeDecomposition> = Vec::new();
    for k in 1..=n {
        let trees: Vec<Vec<(usize, usize)>> = match k {
            1 => vec![Vec::new()],
            2 => vec![vec![(0, 1)]],
            _ => {
                let mut seq = vec![0; k - 2];
                let mut out = vec![prufer_edges(&seq, k)];
                while next_word(&mut seq, k) {
                    out.push(prufer_edges(&seq, k));
                }
                out
            }
        };
        for edges in trees {
            let mut assign = vec![0usize; n];
            loop {
                let mut parts = vec![Subset::EMPTY; k];
                for (x, &v) in assign.iter().enumerate() {
                    parts[v] = parts[v].with(x);
                }
                if parts.iter().all(|p| !p.is_empty()) {
                    let td = TreeDecomposition {
                        parts,
                        edges: edges.clone(),
                    };
                    if is_irredundant_primitive(m, &td)?
                        && !reps
                            .iter()
                            .any(|r| decompositions_isomorphic(r, &td).is_some())
                    {
                        reps.push(td);
                    }
                }
                if !next_word(&mut assign, k) {
                    break;
                }
            }
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::k4_minus_edge;
    use crate::decomposition::build_tree;

    #[test]
    fn prufer_trees_are_trees() {
        let edges = prufer_edges(&[3, 3], 4);
        let td = TreeDecomposition {
            parts: (0..4).map(Subset::singleton).collect(),
            edges,
        };
        assert!(td.check(Subset::full(4)).is_ok());
        assert_eq!(td.degree(3), 3);
    }

    #[test]
    fn k4e_is_unique() {
        let m = k4_minus_edge();
        let found = irredundant_decompositions(&m).unwrap();
        let classes = isomorphism_classes(&found);
        assert_eq!(classes.len(), 1);
        let canonical = build_tree(&m).unwrap().tree;
        assert!(decompositions_isomorphic(&found[classes[0][0]], &canonical).is_some());
        let brute = brute_force_decompositions(&m).unwrap();
        assert_eq!(brute.len(), 1);
        assert!(decompositions_isomorphic(&brute[0], &canonical).is_some());
    }

    #[test]
    fn limits() {
        let big = Matroid::uniform(2, 8).unwrap();
        assert!(matches!(
            irredundant_decompositions(&big),
            Err(Error::GroundSetTooLarge { .. })
        ));
        let six = Matroid::uniform(2, 6).unwrap();
        assert!(matches!(
            brute_force_decompositions(&six),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }
}
