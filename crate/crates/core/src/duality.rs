//! Separations, localizations and the canonical decomposition commute with duality.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::{build_tree, decompositions_isomorphic, TorsoKind};
use crate::error::{Error, Result};
use crate::localization::{localize, virtual_label};
use crate::matroid::Matroid;
use crate::subset::{all_subsets, Subset};

/// Bases are checked exhaustively up to this many, and sampled beyond.
pub const EXHAUSTIVE_BASES: usize = 500;
pub const DEFAULT_TRIALS: usize = 100;

fn separation_order(ranks: &[u8], x: Subset, n: usize) -> Option<usize> {
    let xc = x.complement(n);
    let total = ranks[Subset::full(n).0 as usize] as usize;
    let k = ranks[x.0 as usize] as usize + ranks[xc.0 as usize] as usize - total;
    (x.len() > k && xc.len() > k).then_some(k + 1)
}

/// Checks that every `X ⊆ E` induces a separation of the same order in `M`
/// and `M*` (or in neither). Returns the number of separations seen.
pub fn verify_sep_dual(m: &Matroid) -> Result<usize> {
    m.check_cap()?;
    let d = m.dual()?;
    let (rm, rd) = (m.rank_table()?, d.rank_table()?);
    let n = m.len();
    let mut seen = 0;
    for x in all_subsets(n) {
        let (a, b) = (separation_order(&rm, x, n), separation_order(&rd, x, n));
        if a != b {
            return Err(Error::LemmaFailure(format!(
                "{x:?} has order {a:?} in M but {b:?} in M*"
            )));
        }
        seen += usize::from(a.is_some());
    }
    Ok(seen)
}

/// Checks, for bases `B` of `M`, that extending `B ∩ S` to a basis of `M|S`
/// adds as many elements as extending `B∁ ∩ S∁` to a basis of `M*|S∁`.
///
/// All bases are used when there are at most [`EXHAUSTIVE_BASES`];
/// otherwise `trials` bases drawn with the given seed. Returns the number
/// of bases checked.
pub fn verify_dif_bases(m: &Matroid, s: Subset, trials: usize, seed: u64) -> Result<usize> {
    let d = m.dual()?;
    let n = m.len();
    let sc = s.complement(n);
    let mut bases = m.bases()?;
    if bases.len() > EXHAUSTIVE_BASES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        bases = bases.choose_multiple(&mut rng, trials).copied().collect();
    }
    for &b in &bases {
        let bs = m.extend_to_maximal_independent(b.intersection(s), s)?;
        let f = bs.difference(b).len();
        let bstar = b.complement(n);
        let bsc = d.extend_to_maximal_independent(bstar.intersection(sc), sc)?;
        let g = bsc.difference(bstar).len();
        if f != g {
            return Err(Error::LemmaFailure(format!(
                "basis {b:?}, S = {s:?}: {f} elements added in M|S but {g} in M*|S∁"
            )));
        }
    }
    Ok(bases.len())
}

/// Checks `(M*)_U = (M_U)*` for a family of disjoint 2-separation sides, and
/// that `B ∩ X` is a basis of `M|X` exactly when `B∁ ∩ X` is not a basis of
/// `M*|X`, for every basis `B` and member `X`.
pub fn verify_local_dual(m: &Matroid, family: &[Subset]) -> Result<()> {
    let d = m.dual()?;
    let via_m = localize(m, family)?.into_local().dual()?;
    let via_d = localize(&d, family)?.into_local();
    if via_m != via_d {
        return Err(Error::LemmaFailure(format!(
            "localizing M* at {family:?} differs from the dual of the localization of M"
        )));
    }
    let n = m.len();
    for b in m.bases()? {
        let bc = b.complement(n);
        for &x in family {
            let in_m = m.rank(b.intersection(x)) == m.rank(x);
            let in_d = d.rank(bc.intersection(x)) == d.rank(x);
            if in_m == in_d {
                return Err(Error::LemmaFailure(format!(
                    "basis {b:?} and member {x:?}: B ∩ X basic in M is {in_m}, B∁ ∩ X basic in M* is {in_d}"
                )));
            }
        }
    }
    Ok(())
}

/// Checks that `M` and `M*` have isomorphic canonical decompositions with
/// equal parts, that matched torsos are dual (virtuals identified through
/// the edge correspondence), and that circuit and cocircuit torsos swap.
/// Returns the torso kinds of `M`.
pub fn verify_dual_decomposition(m: &Matroid) -> Result<Vec<TorsoKind>> {
    let dt = build_tree(m)?;
    let dd = build_tree(&m.dual()?)?;
    let map = decompositions_isomorphic(&dt.tree, &dd.tree).ok_or_else(|| {
        Error::LemmaFailure("the decompositions of M and M* are not isomorphic".into())
    })?;
    let edge_map: Vec<usize> = dt
        .tree
        .edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (map[a], map[b]);
            dd.tree
                .edges
                .iter()
                .position(|&(p, q)| (p, q) == (x, y) || (p, q) == (y, x))
                .expect("isomorphisms preserve edges")
        })
        .collect();
    for (v, &w) in map.iter().enumerate() {
        let renamed = dt.torsos[v].dual()?.relabel(|l| {
            (0..edge_map.len())
                .find(|&i| virtual_label(i) == l)
                .map_or_else(|| l.to_string(), |i| virtual_label(edge_map[i]))
        })?;
        if !renamed.same_as(&dd.torsos[w]) {
            return Err(Error::LemmaFailure(format!(
                "torso of M* at node {w} is not the dual of the torso of M at node {v}"
            )));
        }
        if dd.kinds[w] != dt.kinds[v].dual() {
            return Err(Error::LemmaFailure(format!(
                "node {v} is {:?} in M but node {w} is {:?} in M*",
                dt.kinds[v], dd.kinds[w]
            )));
        }
    }
    Ok(dt.kinds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::k4_minus_edge;
    use crate::connectivity::enumerate_2separations;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn separations_of_the_dual() {
        let m = k4_minus_edge();
        // each 2-separation is seen from both sides
        assert_eq!(
            enumerate_2separations(&m).unwrap(),
            enumerate_2separations(&m.dual().unwrap()).unwrap()
        );
        assert!(verify_sep_dual(&m).is_ok());
        assert!(verify_sep_dual(&Matroid::uniform(2, 4).unwrap()).is_ok());
        let u = Matroid::uniform(3, 4).unwrap();
        assert_eq!(enumerate_2separations(&u.dual().unwrap()).unwrap().len(), 3);
        assert!(verify_sep_dual(&u).is_ok());
    }

    #[test]
    fn dif_bases() {
        let m = k4_minus_edge();
        assert_eq!(verify_dif_bases(&m, m.ground(), 100, 0).unwrap(), 8);
        assert!(verify_dif_bases(&m, Subset::EMPTY, 100, 0).is_ok());
        assert!(verify_dif_bases(&m, s(&[0, 1, 2]), 100, 0).is_ok());
        // B = {0,1,3}: B ∩ S = {0,1} is already a basis of M|S, and
        // B∁ ∩ S∁ = {4} is already a basis of M*|{3,4}
        let b = s(&[0, 1, 3]);
        assert!(m.is_basis(b));
        let bs = m
            .extend_to_maximal_independent(s(&[0, 1]), s(&[0, 1, 2]))
            .unwrap();
        assert_eq!(bs.difference(b).len(), 0);
    }

    #[test]
    fn local_duals() {
        let m = k4_minus_edge();
        assert!(verify_local_dual(&m, &[]).is_ok());
        assert!(verify_local_dual(&m, &[s(&[3, 4])]).is_ok());
        assert!(verify_local_dual(&m, &[s(&[0, 1]), s(&[3, 4])]).is_ok());
        let l = localize(&m.dual().unwrap(), &[s(&[0, 1]), s(&[3, 4])]).unwrap();
        assert_eq!(
            l.local().circuits(),
            Matroid::uniform(2, 3).unwrap().circuits()
        );
    }

    #[test]
    fn dual_decompositions() {
        let m = k4_minus_edge();
        assert_eq!(
            verify_dual_decomposition(&m).unwrap(),
            vec![TorsoKind::Circuit, TorsoKind::Circuit, TorsoKind::Cocircuit]
        );
        let dd = build_tree(&m.dual().unwrap()).unwrap();
        assert_eq!(
            dd.kinds,
            vec![
                TorsoKind::Cocircuit,
                TorsoKind::Cocircuit,
                TorsoKind::Circuit
            ]
        );
        assert_eq!(
            verify_dual_decomposition(&Matroid::uniform(2, 4).unwrap()).unwrap(),
            vec![TorsoKind::ThreeConnected]
        );
        assert_eq!(
            verify_dual_decomposition(&Matroid::uniform(3, 4).unwrap()).unwrap(),
            vec![TorsoKind::Circuit]
        );
    }
}
