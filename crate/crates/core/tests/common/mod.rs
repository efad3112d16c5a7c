//! Brute-force oracles that share no code with the library beyond reading
//! a matroid's labels and circuits.

#![allow(dead_code)]

use std::collections::BTreeSet;

use matroid_decomp::{Matroid, Subset};

pub fn set(ix: &[usize]) -> Subset {
    Subset::from_indices(ix.iter().copied())
}

fn bits(x: u64) -> impl Iterator<Item = u64> {
    // all submasks of x, including 0
    let mut s = x;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = s;
        if s == 0 {
            done = true;
        } else {
            s = (s - 1) & x;
        }
        Some(out)
    })
}

pub fn independent(m: &Matroid, x: u64) -> bool {
    m.circuits().iter().all(|c| c.0 & x != c.0)
}

/// Largest independent subset of `x`, by enumeration.
pub fn rank(m: &Matroid, x: u64) -> usize {
    bits(x)
        .filter(|&s| independent(m, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn ranks(m: &Matroid) -> Vec<usize> {
    (0..1u64 << m.len()).map(|x| rank(m, x)).collect()
}

pub fn full(n: usize) -> u64 {
    (1u64 << n) - 1
}

pub fn phi(ranks: &[usize], n: usize, x: u64) -> usize {
    ranks[x as usize] + ranks[(full(n) & !x) as usize] - ranks[full(n) as usize]
}

/// 2-separations as the side holding element 0, in numeric mask order.
pub fn two_separations(m: &Matroid) -> Vec<u64> {
    let n = m.len();
    let r = ranks(m);
    (0..1u64 << n)
        .filter(|&x| x & 1 == 1)
        .filter(|&x| {
            let size = x.count_ones() as usize;
            size >= 2 && n - size >= 2 && phi(&r, n, x) == 1
        })
        .collect()
}

pub fn nested(n: usize, a: u64, b: u64) -> bool {
    let (ac, bc) = (full(n) & !a, full(n) & !b);
    a & b == 0 || a & bc == 0 || ac & b == 0 || ac & bc == 0
}

pub fn good_separations(m: &Matroid) -> Vec<u64> {
    let all = two_separations(m);
    all.iter()
        .copied()
        .filter(|&a| all.iter().all(|&b| nested(m.len(), a, b)))
        .collect()
}

pub type Family = BTreeSet<BTreeSet<String>>;

pub fn circuit_family(m: &Matroid) -> Family {
    m.circuits()
        .iter()
        .map(|&c| m.labels_of(c).into_iter().collect())
        .collect()
}

/// Union of the parts on the `w` side of edge `e` = `vw`.
pub fn far_side(parts: &[Subset], edges: &[(usize, usize)], e: usize, w: usize) -> u64 {
    let (a, b) = edges[e];
    let v = if a == w { b } else { a };
    let mut seen = vec![false; parts.len()];
    seen[v] = true;
    let mut stack = vec![w];
    let mut side = 0;
    while let Some(u) = stack.pop() {
        if seen[u] {
            continue;
        }
        seen[u] = true;
        side |= parts[u].0;
        for &(p, q) in edges {
            if p == u && !seen[q] {
                stack.push(q);
            }
            if q == u && !seen[p] {
                stack.push(p);
            }
        }
    }
    side
}

/// Ground labels and circuits of the torso at `v`, straight from the
/// defining formula, with the virtual element of edge `i` labelled `@e{i}`.
pub fn torso(
    m: &Matroid,
    parts: &[Subset],
    edges: &[(usize, usize)],
    v: usize,
) -> (Vec<String>, Family) {
    let incident: Vec<(usize, u64)> = edges
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| a == v || b == v)
        .map(|(e, &(a, b))| (e, far_side(parts, edges, e, if a == v { b } else { a })))
        .collect();
    let mut ground = m.labels_of(parts[v]);
    ground.extend(incident.iter().map(|(e, _)| format!("@e{e}")));
    let circuits = m
        .circuits()
        .iter()
        .filter(|c| incident.iter().all(|&(_, far)| c.0 & !far != 0))
        .map(|c| {
            let mut out: BTreeSet<String> =
                m.labels_of(c.intersection(parts[v])).into_iter().collect();
            for &(e, far) in &incident {
                if c.0 & far != 0 {
                    out.insert(format!("@e{e}"));
                }
            }
            out
        })
        .collect();
    (ground, circuits)
}

/// Whether a family on `k` elements is that of a circuit or a cocircuit
/// (`U(k-1,k)` or `U(1,k)`), by counting.
pub fn is_circuit_family(f: &Family, k: usize) -> bool {
    f.len() == 1 && f.iter().next().unwrap().len() == k
}

pub fn is_cocircuit_family(f: &Family, k: usize) -> bool {
    f.len() == k * (k - 1) / 2 && f.iter().all(|c| c.len() == 2)
}
