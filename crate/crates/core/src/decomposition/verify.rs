//! Checks on arbitrary tree-decompositions, tree isomorphism, reassembly and
//! the structure of primitive matroids.

use crate::connectivity::{enumerate_2separations, phi, separation_of};
use crate::error::{Error, Result};
use crate::localization::{two_sum, virtual_label};
use crate::matroid::Matroid;
use crate::separation::good_2separations;
use crate::subset::{k_subsets, Subset};

use super::{
    classify_torso, torso_by_formula, DecompositionTree, OrientedSep, TorsoKind, TreeDecomposition,
};

/// What [`verify_tree_decomposition`] found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeReport {
    /// The order of the separation induced by each edge, or `None` when the
    /// induced bipartition is not a separation of any order.
    pub edge_orders: Vec<Option<usize>>,
    /// The largest edge order, if there are edges.
    pub adhesion: Option<usize>,
    /// Every edge induces a separation and all orders agree.
    pub uniform: bool,
    /// Irredundancy, decided only for uniform adhesion 2 (or no edges).
    pub irredundant: Option<bool>,
}

impl TreeReport {
    pub fn all_separations(&self) -> bool {
        self.edge_orders.iter().all(Option::is_some)
    }

    pub fn uniform_adhesion_2(&self) -> bool {
        self.uniform && self.adhesion.is_none_or(|a| a == 2)
    }
}

/// Checks a tree-decomposition `(T, R)` of `m`: the order of every
/// edge-induced bipartition, adhesion, uniformity and, for uniform adhesion
/// 2, irredundancy (torsos have at least three elements and no edge joins
/// two circuits or two cocircuits).
pub fn verify_tree_decomposition(m: &Matroid, td: &TreeDecomposition) -> Result<TreeReport> {
    td.check(m.ground())?;
    let edge_orders: Vec<Option<usize>> = (0..td.edges.len())
        .map(|e| separation_of(m, td.side(e, td.edges[e].0)).map(|s| s.order))
        .collect();
    let adhesion = edge_orders.iter().flatten().copied().max();
    let uniform = edge_orders
        .iter()
        .all(|o| o.is_some() && *o == edge_orders[0]);
    let irredundant = if uniform && adhesion.is_none_or(|a| a == 2) {
        Some(is_irredundant(m, td)?)
    } else {
        None
    };
    Ok(TreeReport {
        edge_orders,
        adhesion,
        uniform,
        irredundant,
    })
}

pub(crate) fn is_irredundant(m: &Matroid, td: &TreeDecomposition) -> Result<bool> {
    if (0..td.node_count()).any(|v| td.parts[v].len() + td.degree(v) < 3) {
        return Ok(false);
    }
    let mut circuit = Vec::with_capacity(td.node_count());
    let mut cocircuit = Vec::with_capacity(td.node_count());
    for v in 0..td.node_count() {
        let t = torso_by_formula(m, td, v)?;
        circuit.push(t.is_circuit_matroid());
        cocircuit.push(t.dual()?.is_circuit_matroid());
    }
    Ok(td
        .edges
        .iter()
        .all(|&(a, b)| !(circuit[a] && circuit[b]) && !(cocircuit[a] && cocircuit[b])))
}

/// A bijection `v -> map[v]` from the nodes of `a` to those of `b` that
/// preserves adjacency and parts, if there is one.
pub fn decompositions_isomorphic(
    a: &TreeDecomposition,
    b: &TreeDecomposition,
) -> Option<Vec<usize>> {
    let n = a.node_count();
    if n != b.node_count() || a.edges.len() != b.edges.len() {
        return None;
    }
    // visit `a` in BFS order so every node after the first has a mapped parent
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for (_, w) in a.incident(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    if order.len() != n {
        return None;
    }
    let adjacent = |t: &TreeDecomposition, x: usize, y: usize| {
        t.edges
            .iter()
            .any(|&(p, q)| (p, q) == (x, y) || (p, q) == (y, x))
    };
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        k: usize,
        order: &[usize],
        parent: &[usize],
        a: &TreeDecomposition,
        b: &TreeDecomposition,
        map: &mut [usize],
        used: &mut [bool],
        adjacent: &dyn Fn(&TreeDecomposition, usize, usize) -> bool,
    ) -> bool {
        let Some(&v) = order.get(k) else {
            return true;
        };
        for w in 0..b.node_count() {
            if used[w] || a.parts[v] != b.parts[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if parent[v] != usize::MAX && !adjacent(b, map[parent[v]], w) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(k + 1, order, parent, a, b, map, used, adjacent) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
    extend(0, &order, &parent, a, b, &mut map, &mut used, &adjacent).then_some(map)
}

/// 2-sums the torsos along the tree edges, identifying the two copies of
/// each virtual `@e{i}`.
pub fn reassemble(dt: &DecompositionTree) -> Result<Matroid> {
    let td = &dt.tree;
    let mut acc = dt.torsos[0].clone();
    let mut inside = vec![false; td.node_count()];
    inside[0] = true;
    let mut pending: Vec<usize> = (0..td.edges.len()).collect();
    while !pending.is_empty() {
        let pos = pending
            .iter()
            .position(|&e| inside[td.edges[e].0] != inside[td.edges[e].1])
            .ok_or_else(|| Error::NotATree("edges do not reach every node".into()))?;
        let e = pending.remove(pos);
        let (a, b) = td.edges[e];
        let next = if inside[a] { b } else { a };
        acc = two_sum(&acc, &dt.torsos[next], &virtual_label(e))?;
        inside[next] = true;
    }
    Ok(acc)
}

/// The longest strictly increasing chain `A1 ⊊ A2 ⊊ ...` of sides.
pub fn max_chain_length(seps: &[OrientedSep]) -> usize {
    let mut sorted: Vec<Subset> = seps.iter().map(|s| s.side).collect();
    sorted.sort_by_key(|s| s.len());
    let mut best = vec![1usize; sorted.len()];
    for i in 0..sorted.len() {
        for j in 0..i {
            if sorted[j].is_proper_subset(sorted[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// What [`verify_primitive_structure`] checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveReport {
    pub three_connected: bool,
    pub kind: TorsoKind,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub small_sides_checked: usize,
}

/// Checks the structure of a connected primitive matroid on at least three
/// elements. If it is not 3-connected: every pair is a side of a
/// 2-separation, it is a circuit or a cocircuit, every two elements are
/// separated by a 2-separation, and for every `x, y, z` some 2-separation
/// has `{x, y}` on one side and `z` on the other. In every case, each
/// 2-separation with a side `S` of size 2 has `S` a coindependent circuit or
/// an independent cocircuit.
pub fn verify_primitive_structure(m: &Matroid) -> Result<PrimitiveReport> {
    m.check_cap()?;
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    if m.len() < 3 {
        return Err(Error::TooSmall);
    }
    if !good_2separations(m)?.is_empty() {
        return Err(Error::PreconditionViolated(
            "matroid has a good 2-separation".into(),
        ));
    }
    let n = m.len();
    let all = enumerate_2separations(m)?;
    let three_connected = all.is_empty();
    let dual = m.dual()?;
    let fail = |msg: String| Err(Error::LemmaFailure(msg));
    let mut pairs_checked = 0;
    let mut triples_checked = 0;

    if !three_connected {
        for pair in k_subsets(n, 2) {
            if separation_of(m, pair).map(|s| s.order) != Some(2) {
                return fail(format!("pair {pair:?} is not a side of a 2-separation"));
            }
            let (u, v) = (pair.first().unwrap(), pair.iter().nth(1).unwrap());
            if !all
                .iter()
                .any(|s| s.side_a.contains(u) != s.side_a.contains(v))
            {
                return fail(format!("no 2-separation separates {u} and {v}"));
            }
            pairs_checked += 1;
        }
        if !m.is_circuit_matroid() && !dual.is_circuit_matroid() {
            return fail(
                "every pair is a 2-separation side but M is neither a circuit nor a cocircuit"
                    .into(),
            );
        }
        for pair in k_subsets(n, 2) {
            for z in pair.complement(n).iter() {
                let found = all.iter().any(|s| {
                    [s.side_a, s.side_b]
                        .iter()
                        .any(|side| pair.is_subset(*side) && !side.contains(z))
                });
                if !found {
                    return fail(format!("no 2-separation puts {pair:?} against {z}"));
                }
                triples_checked += 1;
            }
        }
    }

    let mut small_sides_checked = 0;
    let r = m.rank(m.ground());
    for s in &all {
        for (side, other) in [(s.side_a, s.side_b), (s.side_b, s.side_a)] {
            if side.len() != 2 {
                continue;
            }
            let coindependent = m.rank(other) == r;
            let ok = (m.is_circuit(side) && coindependent)
                || (m.is_independent(side) && dual.is_circuit(side));
            if !ok {
                return fail(format!(
                    "2-separation side {side:?} is neither a coindependent circuit nor an independent cocircuit"
                ));
            }
            small_sides_checked += 1;
        }
    }
    debug_assert!(all.iter().all(|s| phi(m, s.side_a) == 1));
    let kind = classify_torso(m)?;
    Ok(PrimitiveReport {
        three_connected,
        kind,
        pairs_checked,
        triples_checked,
        small_sides_checked,
    })
}
