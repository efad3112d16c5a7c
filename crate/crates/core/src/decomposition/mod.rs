//! The canonical tree-decomposition of a connected matroid along its good
//! 2-separations, with torsos and their classification.

mod search;
mod verify;

pub use search::{brute_force_decompositions, irredundant_decompositions, isomorphism_classes};
pub use verify::{
    decompositions_isomorphic, max_chain_length, reassemble, verify_primitive_structure,
    verify_tree_decomposition, PrimitiveReport, TreeReport,
};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::connectivity::{is_n_connected, separation_of, Separation};
use crate::error::{Error, Result};
use crate::localization::{localize_labeled, virtual_label};
use crate::matroid::{sort_family, validate_family, Matroid, ValidationLevel};
use crate::separation::good_2separations;
use crate::subset::Subset;

/// A separation `(A, A∁)` with a chosen orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientedSep {
    pub side: Subset,
    pub comp: Subset,
}

impl OrientedSep {
    pub fn of(s: &Separation) -> OrientedSep {
        OrientedSep {
            side: s.side_a,
            comp: s.side_b,
        }
    }

    pub fn inverse(&self) -> OrientedSep {
        OrientedSep {
            side: self.comp,
            comp: self.side,
        }
    }

    /// `(A, A∁) ≤ (B, B∁)` iff `A ⊆ B`.
    pub fn le(&self, other: &OrientedSep) -> bool {
        self.side.is_subset(other.side)
    }

    pub(crate) fn nested_with(&self, other: &OrientedSep) -> bool {
        [
            self.side.intersection(other.side),
            self.side.intersection(other.comp),
            self.comp.intersection(other.side),
            self.comp.intersection(other.comp),
        ]
        .iter()
        .any(|q| q.is_empty())
    }
}

/// Both orientations of every separation, each followed by its inverse.
pub fn orient_all(seps: &[Separation]) -> Vec<OrientedSep> {
    seps.iter()
        .flat_map(|s| [OrientedSep::of(s), OrientedSep::of(s).inverse()])
        .collect()
}

/// Partitions a symmetric, pairwise nested set of oriented separations into
/// the classes of `~`, where `(A,A∁) ~ (B,B∁)` iff they are equal or
/// `A∁ ⊊ B` with no `(C,C∁)` in the set satisfying `A∁ ⊊ C ⊊ B`.
///
/// Classes are lists of indices into `seps`, ordered by least index.
pub fn equivalence_classes(seps: &[OrientedSep]) -> Result<Vec<Vec<usize>>> {
    for s in seps {
        if !seps.contains(&s.inverse()) {
            return Err(Error::NotSymmetric(s.side));
        }
    }
    for (i, s) in seps.iter().enumerate() {
        for t in &seps[i + 1..] {
            if !s.nested_with(t) {
                return Err(Error::NotNested(s.side, t.side));
            }
        }
    }
    let n = seps.len();
    let related = |a: &OrientedSep, b: &OrientedSep| {
        a == b
            || (a.comp.is_proper_subset(b.side)
                && !seps
                    .iter()
                    .any(|c| a.comp.is_proper_subset(c.side) && c.side.is_proper_subset(b.side)))
    };
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            rel[i][j] = related(&seps[i], &seps[j]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if rel[i][j] != rel[j][i] {
                return Err(Error::LemmaFailure(format!(
                    "~ is not symmetric on {:?} and {:?}",
                    seps[i].side, seps[j].side
                )));
            }
            if !rel[i][j] {
                continue;
            }
            for k in 0..n {
                if rel[j][k] && !rel[i][k] {
                    return Err(Error::LemmaFailure(format!(
                        "~ is not transitive on {:?}, {:?}, {:?}",
                        seps[i].side, seps[j].side, seps[k].side
                    )));
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&j| rel[i][j]).collect();
        for &j in &members {
            class_of[j] = classes.len();
        }
        classes.push(members);
    }
    Ok(classes)
}

/// A tree-decomposition `(T, R)`: a tree on `parts.len()` nodes with the
/// given edges, and a part of the ground set at every node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub parts: Vec<Subset>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn single(ground: Subset) -> TreeDecomposition {
        TreeDecomposition {
            parts: vec![ground],
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// `(edge index, other end)` for the edges at `v`, by edge index.
    pub fn incident(&self, v: usize) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, &(a, b))| {
                if a == v {
                    Some((i, b))
                } else if b == v {
                    Some((i, a))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Checks that the edges form a tree and the parts partition `ground`.
    pub fn check(&self, ground: Subset) -> Result<()> {
        let n = self.parts.len();
        if n == 0 {
            return Err(Error::NotATree("no nodes".into()));
        }
        if self.edges.len() + 1 != n {
            return Err(Error::NotATree(format!(
                "{} nodes but {} edges",
                n,
                self.edges.len()
            )));
        }
        for &(a, b) in &self.edges {
            if a >= n || b >= n || a == b {
                return Err(Error::NotATree(format!("bad edge ({a}, {b})")));
            }
        }
        let reached = self.component(0, None);
        if reached.iter().filter(|&&r| r).count() != n {
            return Err(Error::NotATree("not connected".into()));
        }
        let mut union = Subset::EMPTY;
        for &p in &self.parts {
            if union.meets(p) {
                return Err(Error::NotAPartition);
            }
            union = union.union(p);
        }
        if union != ground {
            return Err(Error::NotAPartition);
        }
        Ok(())
    }

    /// Nodes reachable from `v` without using edge `skip`.
    fn component(&self, v: usize, skip: Option<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.parts.len()];
        let mut queue = VecDeque::from([v]);
        seen[v] = true;
        while let Some(x) = queue.pop_front() {
            for (i, &(a, b)) in self.edges.iter().enumerate() {
                if Some(i) == skip {
                    continue;
                }
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// `S(e, v)`: the union of the parts on `v`'s side of `T - e`.
    pub fn side(&self, e: usize, v: usize) -> Subset {
        self.component(v, Some(e))
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .fold(Subset::EMPTY, |acc, (x, _)| acc.union(self.parts[x]))
    }
}

/// What a torso of the canonical decomposition is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsoKind {
    ThreeConnected,
    Circuit,
    Cocircuit,
}

impl TorsoKind {
    pub fn dual(self) -> TorsoKind {
        match self {
            TorsoKind::ThreeConnected => TorsoKind::ThreeConnected,
            TorsoKind::Circuit => TorsoKind::Cocircuit,
            TorsoKind::Cocircuit => TorsoKind::Circuit,
        }
    }
}

/// The canonical decomposition of a connected matroid.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    pub tree: TreeDecomposition,
    /// Edge `i` separates `seps[i].side_a = S(i, a)` from `seps[i].side_b = S(i, b)`
    /// where `tree.edges[i] = (a, b)`.
    pub seps: Vec<Separation>,
    /// The oriented separations making up each node; empty for the synthetic node.
    pub classes: Vec<Vec<OrientedSep>>,
    pub torsos: Vec<Matroid>,
    pub kinds: Vec<TorsoKind>,
}

impl DecompositionTree {
    pub fn node_count(&self) -> usize {
        self.tree.node_count()
    }

    pub fn parts(&self) -> &[Subset] {
        &self.tree.parts
    }
}

/// Builds `T_F` from a pairwise nested set of separations: nodes are the
/// `~`-classes of the oriented set, one edge per separation, and the part
/// of a node is the intersection of the `A`-sides in its class.
///
/// Nodes are ordered by the least `A`-side in the class (size, then
/// lexicographic). Returns the tree, the edge separations oriented as
/// `S(e, a)`, and the classes.
pub fn tree_from_nested(
    ground: Subset,
    seps: &[Separation],
) -> Result<(TreeDecomposition, Vec<Separation>, Vec<Vec<OrientedSep>>)> {
    if seps.is_empty() {
        return Ok((
            TreeDecomposition::single(ground),
            Vec::new(),
            vec![Vec::new()],
        ));
    }
    let oriented = orient_all(seps);
    let raw = equivalence_classes(&oriented)?;
    let name = |c: &Vec<usize>| {
        c.iter()
            .map(|&i| oriented[i].side)
            .min_by(|a, b| a.canonical_cmp(*b))
            .expect("classes are nonempty")
    };
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&x, &y| name(&raw[x]).canonical_cmp(name(&raw[y])));
    let mut node_of = vec![usize::MAX; oriented.len()];
    for (node, &c) in order.iter().enumerate() {
        for &i in &raw[c] {
            node_of[i] = node;
        }
    }
    let classes: Vec<Vec<OrientedSep>> = order
        .iter()
        .map(|&c| raw[c].iter().map(|&i| oriented[i]).collect())
        .collect();
    let parts: Vec<Subset> = classes
        .iter()
        .map(|c| c.iter().fold(ground, |acc, s| acc.intersection(s.side)))
        .collect();
    let mut edges = Vec::with_capacity(seps.len());
    for (i, s) in seps.iter().enumerate() {
        let (a, b) = (node_of[2 * i], node_of[2 * i + 1]);
        if a == b {
            return Err(Error::LemmaFailure(format!(
                "both orientations of {:?} fall in one class",
                s.side_a
            )));
        }
        edges.push((a, b));
    }
    let tree = TreeDecomposition { parts, edges };
    tree.check(ground)?;
    for (i, s) in seps.iter().enumerate() {
        if tree.side(i, tree.edges[i].0) != s.side_a {
            return Err(Error::LemmaFailure(format!(
                "edge side S(e, [(A, A∁)]) differs from A = {:?}",
                s.side_a
            )));
        }
    }
    Ok((tree, seps.to_vec(), classes))
}

/// The torso at `v` from the circuits of `m` alone: ground `R_v` (in ground
/// order) followed by one virtual `@e{i}` per incident edge `i`, and
/// circuits `(C ∩ R_v) ∪ {e : C meets S(e, w)}` for every circuit `C` not
/// contained in any `S(e, w)`.
pub fn torso_by_formula(m: &Matroid, td: &TreeDecomposition, v: usize) -> Result<Matroid> {
    let part = td.parts[v];
    let far: Vec<(usize, Subset)> = td
        .incident(v)
        .into_iter()
        .map(|(e, w)| (e, td.side(e, w)))
        .collect();
    let mut image_of = vec![usize::MAX; m.len()];
    for (j, x) in part.iter().enumerate() {
        image_of[x] = j;
    }
    let mut labels: Vec<String> = part.iter().map(|x| m.label(x).to_string()).collect();
    for (k, &(e, side)) in far.iter().enumerate() {
        for x in side.iter() {
            image_of[x] = part.len() + k;
        }
        labels.push(virtual_label(e));
    }
    let mut circuits: Vec<Subset> = m
        .circuits()
        .iter()
        .filter(|c| !far.iter().any(|(_, side)| c.is_subset(*side)))
        .map(|c| Subset::from_indices(c.iter().map(|x| image_of[x])))
        .collect();
    sort_family(&mut circuits);
    validate_family(&circuits, ValidationLevel::Antichain)
        .map_err(|e| Error::LemmaFailure(format!("torso circuits at node {v}: {e}")))?;
    Ok(Matroid::from_circuits(labels, circuits, ValidationLevel::None)?.with_cap(m.cap()))
}

/// The torso at `v`, checked against the localization of `m` at the far
/// sides of the edges at `v`.
pub fn torso(m: &Matroid, td: &TreeDecomposition, v: usize) -> Result<Matroid> {
    let t = torso_by_formula(m, td, v)?;
    let incident = td.incident(v);
    let family: Vec<Subset> = incident.iter().map(|&(e, w)| td.side(e, w)).collect();
    let labels = incident.iter().map(|&(e, _)| virtual_label(e)).collect();
    let local = localize_labeled(m, &family, labels)?.into_local();
    if local != t {
        return Err(Error::LemmaFailure(format!(
            "torso at node {v} differs from the localization at its star"
        )));
    }
    Ok(t)
}

/// Classifies a connected matroid on at least three elements without good
/// 2-separations. Circuit is tested first, then cocircuit, then 3-connectivity.
pub fn classify_torso(t: &Matroid) -> Result<TorsoKind> {
    if t.len() < 3 {
        return Err(Error::TooSmall);
    }
    if !t.is_connected() {
        return Err(Error::Disconnected);
    }
    let circuit = t.is_circuit_matroid();
    let cocircuit = t.dual()?.is_circuit_matroid();
    if circuit && cocircuit {
        return Err(Error::LemmaFailure(format!(
            "{t:?} is both a circuit and a cocircuit"
        )));
    }
    if circuit {
        return Ok(TorsoKind::Circuit);
    }
    if cocircuit {
        return Ok(TorsoKind::Cocircuit);
    }
    if is_n_connected(t, 3)? {
        return Ok(TorsoKind::ThreeConnected);
    }
    Err(Error::Unclassifiable)
}

/// A connected matroid is primitive if it has no good 2-separations.
pub fn is_primitive(m: &Matroid) -> Result<bool> {
    Ok(good_2separations(m)?.is_empty())
}

/// The canonical tree-decomposition of a connected matroid on at least
/// three elements, with every structural property checked.
pub fn build_tree(m: &Matroid) -> Result<DecompositionTree> {
    m.check_cap()?;
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    if m.len() < 3 {
        return Err(Error::TooSmall);
    }
    let goods = good_2separations(m)?;
    let (tree, seps, classes) = tree_from_nested(m.ground(), &goods).map_err(|e| match e {
        Error::NotATree(msg) => Error::LemmaFailure(format!("T is not a tree: {msg}")),
        Error::NotAPartition => Error::LemmaFailure("parts do not partition E".into()),
        other => other,
    })?;
    for (i, s) in seps.iter().enumerate() {
        if separation_of(m, s.side_a).map(|x| x.order) != Some(2) {
            return Err(Error::LemmaFailure(format!(
                "edge {i} does not induce a 2-separation"
            )));
        }
    }
    let torsos: Vec<Matroid> = (0..tree.node_count())
        .map(|v| torso(m, &tree, v))
        .collect::<Result<_>>()?;
    for (v, t) in torsos.iter().enumerate() {
        if t.len() < 3 {
            return Err(Error::LemmaFailure(format!(
                "torso at node {v} has fewer than 3 elements"
            )));
        }
        if !is_primitive(t)? {
            return Err(Error::LemmaFailure(format!(
                "torso at node {v} has a good 2-separation"
            )));
        }
    }
    let kinds: Vec<TorsoKind> = torsos.iter().map(classify_torso).collect::<Result<_>>()?;
    for &(a, b) in &tree.edges {
        if kinds[a] == kinds[b] && kinds[a] != TorsoKind::ThreeConnected {
            return Err(Error::LemmaFailure(format!(
                "adjacent nodes {a} and {b} are both {:?}",
                kinds[a]
            )));
        }
    }
    Ok(DecompositionTree {
        tree,
        seps,
        classes,
        torsos,
        kinds,
    })
}
