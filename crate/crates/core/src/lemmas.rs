//! Executable forms of the structural lemmas, checked exhaustively on one
//! matroid at a time. Every check either passes or returns a
//! `LemmaFailure` naming the offending sets.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{
    del, enumerate_2separations, phi, phi_by_rank, separation_of, Separation,
};
use crate::decomposition::{
    brute_force_decompositions, build_tree, decompositions_isomorphic, irredundant_decompositions,
    is_primitive, isomorphism_classes, max_chain_length, orient_all, reassemble,
    verify_primitive_structure, verify_tree_decomposition,
};
use crate::duality::{
    verify_dif_bases, verify_dual_decomposition, verify_local_dual, verify_sep_dual, DEFAULT_TRIALS,
};
use crate::error::{Error, Result};
use crate::localization::{localize, localize_labeled, split_along, two_sum, LocalElement};
use crate::matroid::{validate_family, Matroid, ValidationLevel};
use crate::separation::{
    are_nested, corner, crosses_circuit, good_2separations, infinite_switch, switch_circuits,
    symmetric_difference_sep,
};
use crate::subset::{all_subsets, Subset};

/// Submodularity is checked over all pairs of subsets up to this size.
pub const PAIRWISE_LIMIT: usize = 8;
/// Localization checks run on every family of disjoint 2-separation sides up to this size.
pub const LOCALIZATION_LIMIT: usize = 8;
/// Random basis pairs per subset when checking that `del` does not depend on the bases.
pub const DEL_TRIALS: usize = 50;

/// One named check and the number of instances it was evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Duality,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "duality" => Ok(Suite::Duality),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidParams(format!("unknown suite {other:?}"))),
        }
    }
}

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::LemmaFailure(msg))
}

/// Every 2-separation in both orientations.
fn both_orientations(all: &[Separation]) -> Vec<Separation> {
    all.iter().flat_map(|s| [*s, s.inverse()]).collect()
}

/// Runs the chosen suite on `m`.
pub fn run_suite(m: &Matroid, suite: Suite, seed: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    if suite != Suite::Duality {
        checks.extend(kernel_checks(m)?);
        checks.extend(connectivity_checks(m, seed)?);
        checks.extend(separation_lemmas(m)?);
        checks.extend(localization_checks(m)?);
        checks.extend(decomposition_checks(m)?);
    }
    if suite != Suite::Lemmas {
        checks.extend(duality_checks(m, seed)?);
    }
    Ok(checks)
}

/// Circuit elimination, double duality, basis exchange, circuit-cocircuit
/// intersections and the rank function.
pub fn kernel_checks(m: &Matroid) -> Result<Vec<Check>> {
    validate_family(m.circuits(), ValidationLevel::Full)
        .map_err(|e| Error::LemmaFailure(format!("stored circuits fail the axioms: {e}")))?;
    let d = m.dual()?;
    if d.dual()? != *m {
        return fail("the double dual differs from the matroid".into());
    }
    let bases = m.bases()?;
    let sample = &bases[..bases.len().min(200)];
    for &b in sample {
        for &b2 in sample {
            if b.difference(b2).len() != b2.difference(b).len() {
                return fail(format!("bases {b:?} and {b2:?} violate exchange"));
            }
        }
    }
    let mut meets = 0;
    for &c in m.circuits() {
        for &k in d.circuits() {
            if c.intersection(k).len() == 1 {
                return fail(format!(
                    "circuit {c:?} meets cocircuit {k:?} in one element"
                ));
            }
            meets += 1;
        }
    }
    let ranks = m.rank_table()?;
    let n = m.len();
    let r = |x: Subset| ranks[x.0 as usize] as usize;
    let mut rank_pairs = 0;
    if n <= PAIRWISE_LIMIT {
        for x in all_subsets(n) {
            for y in all_subsets(n) {
                if r(x) + r(y) < r(x.union(y)) + r(x.intersection(y)) {
                    return fail(format!("rank is not submodular on {x:?}, {y:?}"));
                }
                if x.is_subset(y) && r(x) > r(y) {
                    return fail(format!("rank is not monotone on {x:?} ⊆ {y:?}"));
                }
                rank_pairs += 1;
            }
        }
    }
    Ok(vec![
        Check {
            name: "circuit elimination",
            cases: m.circuits().len(),
        },
        Check {
            name: "double dual",
            cases: 1,
        },
        Check {
            name: "basis exchange",
            cases: sample.len() * sample.len(),
        },
        Check {
            name: "circuit-cocircuit intersection",
            cases: meets,
        },
        Check {
            name: "rank monotone and submodular",
            cases: rank_pairs,
        },
    ])
}

/// A basis of `M|X` built greedily in a random order.
fn random_basis(m: &Matroid, x: Subset, rng: &mut ChaCha8Rng) -> Subset {
    let mut order = x.to_vec();
    order.shuffle(rng);
    order.into_iter().fold(Subset::EMPTY, |b, e| {
        if m.is_independent(b.with(e)) {
            b.with(e)
        } else {
            b
        }
    })
}

/// `φ` against the rank identity, symmetry, submodularity (all pairs, up
/// to [`PAIRWISE_LIMIT`] elements) and independence of `del` from the
/// choice of bases.
pub fn connectivity_checks(m: &Matroid, seed: u64) -> Result<Vec<Check>> {
    let n = m.len();
    let ranks = m.rank_table()?;
    let total = ranks[m.ground().0 as usize] as usize;
    let mut values = vec![0usize; 1 << n];
    for x in all_subsets(n) {
        let xc = x.complement(n);
        let by_table = ranks[x.0 as usize] as usize + ranks[xc.0 as usize] as usize - total;
        let p = phi(m, x);
        if p != by_table || p != phi_by_rank(m, x) {
            return fail(format!(
                "φ({x:?}) = {p} but the rank identity gives {by_table}"
            ));
        }
        if p != phi(m, xc) {
            return fail(format!("φ is not symmetric on {x:?}"));
        }
        values[x.0 as usize] = p;
    }
    let mut pairs = 0;
    if n <= PAIRWISE_LIMIT {
        for x in all_subsets(n) {
            for y in all_subsets(n) {
                let lhs = values[x.0 as usize] + values[y.0 as usize];
                let rhs = values[x.union(y).0 as usize] + values[x.intersection(y).0 as usize];
                if lhs < rhs {
                    return fail(format!("φ is not submodular on {x:?}, {y:?}"));
                }
                pairs += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for x in all_subsets(n) {
        let xc = x.complement(n);
        for _ in 0..DEL_TRIALS {
            let (bx, bxc) = (random_basis(m, x, &mut rng), random_basis(m, xc, &mut rng));
            let d = del(m, bx, bxc)?;
            if d != values[x.0 as usize] {
                return fail(format!(
                    "del({bx:?}, {bxc:?}) = {d} but φ({x:?}) = {}",
                    values[x.0 as usize]
                ));
            }
        }
    }
    Ok(vec![
        Check {
            name: "φ rank identity and symmetry",
            cases: 1 << n,
        },
        Check {
            name: "φ submodular",
            cases: pairs,
        },
        Check {
            name: "del independent of bases",
            cases: (1 << n) * DEL_TRIALS,
        },
    ])
}

/// All families of pairwise disjoint sides with at most `max` members,
/// each listed once in the order of `sides`.
pub fn disjoint_families(sides: &[Subset], max: usize) -> Vec<Vec<Subset>> {
    fn grow(
        sides: &[Subset],
        from: usize,
        used: Subset,
        max: usize,
        current: &mut Vec<Subset>,
        out: &mut Vec<Vec<Subset>>,
    ) {
        out.push(current.clone());
        if current.len() == max {
            return;
        }
        for i in from..sides.len() {
            if !sides[i].meets(used) {
                current.push(sides[i]);
                grow(sides, i + 1, used.union(sides[i]), max, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(sides, 0, Subset::EMPTY, max, &mut Vec::new(), &mut out);
    out
}

/// Corner, symmetric difference, the small outside quadrant of a corner
/// that is not a 2-separation, the improper-subset lemma,
/// switching, infinite switching for one and two members, nestedness and
/// the good set.
pub fn separation_lemmas(m: &Matroid) -> Result<Vec<Check>> {
    let n = m.len();
    let all = enumerate_2separations(m)?;
    let both = both_orientations(&all);
    let connected = m.is_connected();

    let mut nested_pairs = 0;
    for s in &all {
        for t in &all {
            let (a, b) = (s.side_a, t.side_a);
            let (ac, bc) = (s.side_b, t.side_b);
            let by_subsets =
                a.is_subset(b) || a.is_subset(bc) || ac.is_subset(b) || ac.is_subset(bc);
            if are_nested(s, t)? != by_subsets {
                return fail(format!(
                    "nestedness of {a:?} and {b:?} depends on the formulation"
                ));
            }
            nested_pairs += 1;
        }
    }

    let (mut corners, mut quadrants, mut symdiffs) = (0, 0, 0);
    for s1 in &both {
        for s2 in &both {
            if are_nested(s1, s2)? {
                continue;
            }
            let side = s1.side_a.intersection(s2.side_a);
            if connected && side.len() >= 2 && n - side.len() >= 2 {
                let is_2sep = separation_of(m, side).map(|s| s.order) == Some(2);
                if !is_2sep && s1.side_a.union(s2.side_a).complement(n).len() < 2 {
                    return fail(format!(
                        "corner {side:?} is not a 2-separation yet the outside quadrant is small"
                    ));
                }
                quadrants += 1;
                corner(m, s1, s2)?;
                corners += 1;
            }
            if connected {
                symmetric_difference_sep(m, s1, s2)?;
                symdiffs += 1;
            }
        }
    }

    let (mut improper, mut switches) = (0, 0);
    for s in &both {
        let crossing: Vec<Subset> = m
            .circuits()
            .iter()
            .copied()
            .filter(|&c| crosses_circuit(c, s))
            .collect();
        for &c1 in &crossing {
            for &c2 in &crossing {
                if c1
                    .intersection(s.side_a)
                    .is_proper_subset(c2.intersection(s.side_a))
                {
                    return fail(format!(
                        "{c1:?} ∩ S is a proper subset of {c2:?} ∩ S for S = {:?}",
                        s.side_a
                    ));
                }
                improper += 1;
                switch_circuits(m, c1, c2, s)?;
                switches += 1;
            }
        }
    }

    let sides: Vec<Subset> = both.iter().map(|s| s.side_a).collect();
    let mut inf_switches = 0;
    for family in disjoint_families(&sides, 2)
        .into_iter()
        .filter(|f| !f.is_empty())
    {
        let union = family.iter().fold(Subset::EMPTY, |a, &x| a.union(x));
        let outside = union.complement(n);
        let crossing: Vec<Subset> = m
            .circuits()
            .iter()
            .copied()
            .filter(|c| {
                family
                    .iter()
                    .all(|x| c.meets(*x) && c.meets(x.complement(n)))
            })
            .collect();
        for &c1 in &crossing {
            for &c2 in &crossing {
                if c1.meets(outside) && !c2.meets(outside) {
                    continue;
                }
                infinite_switch(m, c1, c2, &family)?;
                inf_switches += 1;
            }
        }
    }

    let mut good_pairs = 0;
    if connected {
        let good = good_2separations(m)?;
        for s in &good {
            for t in &good {
                if !are_nested(s, t)? {
                    return fail(format!(
                        "good 2-separations {:?} and {:?} cross",
                        s.side_a, t.side_a
                    ));
                }
                good_pairs += 1;
            }
        }
    }

    Ok(vec![
        Check {
            name: "nestedness formulations agree",
            cases: nested_pairs,
        },
        Check {
            name: "corner lemma",
            cases: corners,
        },
        Check {
            name: "outside quadrant of a corner",
            cases: quadrants,
        },
        Check {
            name: "symmetric difference lemma",
            cases: symdiffs,
        },
        Check {
            name: "improper subset lemma",
            cases: improper,
        },
        Check {
            name: "switching lemma",
            cases: switches,
        },
        Check {
            name: "infinite switching lemma",
            cases: inf_switches,
        },
        Check {
            name: "good set nested",
            cases: good_pairs,
        },
    ])
}

/// Localizations at every family of disjoint 2-separation sides: circuit
/// axioms, the independent-set and basis formulas, the 2-separation and
/// goodness correspondences, lifting inside the image of a 2-separation,
/// and restriction. Also the per-separation facts used to prove them, and
/// split/2-sum round trips. Connected matroids only; families are
/// enumerated up to [`LOCALIZATION_LIMIT`] elements.
pub fn localization_checks(m: &Matroid) -> Result<Vec<Check>> {
    if !m.is_connected() || m.len() < 2 {
        return Ok(Vec::new());
    }
    let n = m.len();
    let all = enumerate_2separations(m)?;
    let both = both_orientations(&all);
    let mut checks = per_separation_checks(m, &all, &both)?;
    if n > LOCALIZATION_LIMIT {
        return Ok(checks);
    }

    let sides: Vec<Subset> = both.iter().map(|s| s.side_a).collect();
    let families = disjoint_families(&sides, sides.len());
    let (mut indeps, mut bases, mut projections, mut goods, mut lifts, mut restrictions) =
        (0, 0, 0, 0, 0, 0);
    for family in &families {
        let l = localize(m, family)?;
        let local = l.local();
        let nl = local.len();
        validate_family(local.circuits(), ValidationLevel::Full).map_err(|e| {
            Error::LemmaFailure(format!("localization at {family:?} is not a matroid: {e}"))
        })?;

        let mut image = vec![false; 1 << nl];
        for i in all_subsets(n).filter(|&i| m.is_independent(i)) {
            image[l.local_independents_correspond(i)?.0 as usize] = true;
        }
        for z in all_subsets(nl) {
            if image[z.0 as usize] != local.is_independent(z) {
                return fail(format!(
                    "localization at {family:?}: {z:?} independent {} but an image {}",
                    local.is_independent(z),
                    image[z.0 as usize]
                ));
            }
            indeps += 1;
        }
        bases += l.local_bases()?.len();

        for z in all_subsets(nl).filter(|z| z.contains(0)) {
            l.project_2sep(z)?;
            projections += 1;
        }
        let local_all = enumerate_2separations(local)?;
        for s in &local_all {
            l.goodness_corresponds_given(s.side_a, &local_all, &all)?;
            goods += 1;
        }

        for s in &both {
            let img = l.phi_u(s.side_a);
            for s_u in img.subsets() {
                if s_u.len() < 2 || nl - s_u.len() < 2 {
                    continue;
                }
                // every dropped element stands for a member straddling S
                let straddling = img.difference(s_u).iter().all(|e| match l.elements()[e] {
                    LocalElement::Virtual(i) => {
                        family[i].meets(s.side_a) && family[i].meets(s.side_b)
                    }
                    LocalElement::Real(_) => false,
                });
                if straddling {
                    l.lift_2sep_subset(s, s_u)?;
                    lifts += 1;
                }
            }
        }

        if family.len() <= 2 {
            restrictions += restriction_commutes(m, family, local, &l)?;
        }
    }
    checks.extend([
        Check {
            name: "localization families",
            cases: families.len(),
        },
        Check {
            name: "local independent sets",
            cases: indeps,
        },
        Check {
            name: "local bases",
            cases: bases,
        },
        Check {
            name: "local 2-separation correspondence",
            cases: projections,
        },
        Check {
            name: "local goodness correspondence",
            cases: goods,
        },
        Check {
            name: "lifting inside an image",
            cases: lifts,
        },
        Check {
            name: "restriction of a localization",
            cases: restrictions,
        },
    ]);
    Ok(checks)
}

/// `M_U | A = (M | φ_U⁻¹(A))_{U_A}` for every `A` where the right side is a localization.
fn restriction_commutes(
    m: &Matroid,
    family: &[Subset],
    local: &Matroid,
    l: &crate::localization::Localization,
) -> Result<usize> {
    let nl = local.len();
    let mut cases = 0;
    for a in all_subsets(nl) {
        let pre = l.phi_u_inverse(a);
        let members: Vec<usize> = (0..family.len())
            .filter(|&i| a.contains(l.virtual_index(i)))
            .collect();
        if members.iter().any(|&i| pre.difference(family[i]).len() < 2) {
            continue;
        }
        let sub = m.restriction(pre);
        let pos: Vec<usize> = {
            let mut p = vec![usize::MAX; m.len()];
            for (j, x) in pre.iter().enumerate() {
                p[x] = j;
            }
            p
        };
        let sub_family: Vec<Subset> = members
            .iter()
            .map(|&i| Subset::from_indices(family[i].iter().map(|x| pos[x])))
            .collect();
        let labels = members
            .iter()
            .map(|&i| local.label(l.virtual_index(i)).to_string())
            .collect();
        let Ok(sub_local) = localize_labeled(&sub, &sub_family, labels) else {
            continue;
        };
        if !local.restriction(a).same_as(sub_local.local()) {
            return fail(format!(
                "restricting the localization at {family:?} to {a:?} differs from localizing the restriction"
            ));
        }
        cases += 1;
    }
    Ok(cases)
}

/// Facts about a single 2-separation `(S, S∁)`: crossing circuits with
/// traces in one basis of `M|S` have equal traces; a basis `B` of `M` with
/// `B ∩ S` not spanning `S` contains the trace of no circuit meeting `S`;
/// restriction to `X` keeps `φ_{M|X}(S ∩ X) ≤ 1`; and splitting then
/// 2-summing gives `M` back, with circuits and cocircuits closed under 2-sum.
fn per_separation_checks(
    m: &Matroid,
    all: &[Separation],
    both: &[Separation],
) -> Result<Vec<Check>> {
    let n = m.len();
    let bases = m.bases()?;
    let (mut equal_traces, mut no_trace) = (0, 0);
    for s in both {
        let side = s.side_a;
        let crossing: Vec<Subset> = m
            .circuits()
            .iter()
            .copied()
            .filter(|&c| crosses_circuit(c, s))
            .collect();
        let order = side.to_vec();
        for bs in m.restriction(side).bases()? {
            let b_s = Subset::from_indices(bs.iter().map(|j| order[j]));
            let traces: Vec<Subset> = crossing
                .iter()
                .map(|c| c.intersection(side))
                .filter(|t| t.is_subset(b_s))
                .collect();
            if traces.windows(2).any(|w| w[0] != w[1]) {
                return fail(format!(
                    "crossing circuits with traces in the basis {b_s:?} of M|{side:?} have different traces"
                ));
            }
            equal_traces += 1;
        }
        let rs = m.rank(side);
        for &b in &bases {
            if m.rank(b.intersection(side)) == rs {
                continue;
            }
            if let Some(c) = m
                .circuits()
                .iter()
                .find(|c| c.meets(side) && c.intersection(side).is_subset(b))
            {
                return fail(format!(
                    "circuit {c:?} has its trace on {side:?} inside the basis {b:?}"
                ));
            }
            no_trace += 1;
        }
    }

    let ranks = m.rank_table()?;
    let r = |x: Subset| ranks[x.0 as usize] as usize;
    let mut restricted = 0;
    for s in all {
        for x in all_subsets(n) {
            let (a, b) = (s.side_a.intersection(x), s.side_b.intersection(x));
            if a.len() < 2 || b.len() < 2 {
                continue;
            }
            if r(a) + r(b) - r(x) > 1 {
                return fail(format!(
                    "restricting the 2-separation {:?} to {x:?} raises its connectivity",
                    s.side_a
                ));
            }
            restricted += 1;
        }
    }

    let (mut round_trips, mut closure) = (0, 0);
    for s in all {
        let (m1, m2, e) = split_along(m, s)?;
        let sum = two_sum(&m1, &m2, &e)?;
        if !sum.same_as(m) {
            return fail(format!("2-sum of the split along {:?} is not M", s.side_a));
        }
        round_trips += 1;
        if m1.is_circuit_matroid() && m2.is_circuit_matroid() {
            if !sum.is_circuit_matroid() {
                return fail("the 2-sum of two circuits is not a circuit".into());
            }
            closure += 1;
        }
        if m1.dual()?.is_circuit_matroid() && m2.dual()?.is_circuit_matroid() {
            if !sum.dual()?.is_circuit_matroid() {
                return fail("the 2-sum of two cocircuits is not a cocircuit".into());
            }
            closure += 1;
        }
    }
    Ok(vec![
        Check {
            name: "equal traces in a basis of one side",
            cases: equal_traces,
        },
        Check {
            name: "no circuit trace in a non-spanning basis trace",
            cases: no_trace,
        },
        Check {
            name: "restriction keeps order at most 2",
            cases: restricted,
        },
        Check {
            name: "split and 2-sum round trip",
            cases: round_trips,
        },
        Check {
            name: "2-sums of circuits and of cocircuits",
            cases: closure,
        },
    ])
}

/// The canonical decomposition and everything claimed about it: a valid,
/// irredundant tree-decomposition of uniform adhesion 2 whose torsos
/// reassemble to `M`, the chain bound, uniqueness (up to seven elements,
/// cross-checked by brute force up to five) and the structure of primitive
/// matroids. Connected matroids on at least three elements only.
pub fn decomposition_checks(m: &Matroid) -> Result<Vec<Check>> {
    let n = m.len();
    if n < 3 || !m.is_connected() {
        return Ok(Vec::new());
    }
    let dt = build_tree(m)?;
    let report = verify_tree_decomposition(m, &dt.tree)?;
    if !report.all_separations() || !report.uniform_adhesion_2() || report.irredundant != Some(true)
    {
        return fail(format!(
            "canonical decomposition fails its own checks: {report:?}"
        ));
    }
    if !reassemble(&dt)?.same_as(m) {
        return fail("reassembling the torsos does not give M".into());
    }
    let goods = orient_all(&good_2separations(m)?);
    let chain = max_chain_length(&goods);
    if chain > n {
        return fail(format!("a chain of {chain} good sides in {n} elements"));
    }
    let mut checks = vec![
        Check {
            name: "canonical decomposition",
            cases: dt.node_count(),
        },
        Check {
            name: "reassembly",
            cases: dt.tree.edges.len(),
        },
        Check {
            name: "chain length",
            cases: goods.len(),
        },
    ];
    if n <= 7 {
        let found = irredundant_decompositions(m)?;
        let classes = isomorphism_classes(&found);
        if classes.len() != 1 {
            return fail(format!(
                "{} irredundant decompositions up to isomorphism",
                classes.len()
            ));
        }
        if decompositions_isomorphic(&found[classes[0][0]], &dt.tree).is_none() {
            return fail("the unique irredundant decomposition is not the canonical one".into());
        }
        checks.push(Check {
            name: "uniqueness",
            cases: found.len(),
        });
    }
    if n <= 5 {
        let brute = brute_force_decompositions(m)?;
        if brute.len() != 1 || decompositions_isomorphic(&brute[0], &dt.tree).is_none() {
            return fail(format!(
                "brute force finds {} irredundant decompositions, expected the canonical one",
                brute.len()
            ));
        }
        checks.push(Check {
            name: "uniqueness by brute force",
            cases: 1,
        });
    }
    let mut primitive = 0;
    if is_primitive(m)? {
        verify_primitive_structure(m)?;
        primitive += 1;
    }
    for t in &dt.torsos {
        verify_primitive_structure(t)?;
        primitive += 1;
    }
    checks.push(Check {
        name: "primitive structure",
        cases: primitive,
    });
    Ok(checks)
}

/// Separations, basis differences, localizations and the decomposition
/// against the dual.
pub fn duality_checks(m: &Matroid, seed: u64) -> Result<Vec<Check>> {
    let n = m.len();
    let seps = verify_sep_dual(m)?;
    let all = enumerate_2separations(m)?;
    let sides: Vec<Subset> = if n <= PAIRWISE_LIMIT {
        all_subsets(n).collect()
    } else {
        let mut v: Vec<Subset> = both_orientations(&all).iter().map(|s| s.side_a).collect();
        v.extend([Subset::EMPTY, m.ground()]);
        v
    };
    let mut dif = 0;
    for &s in &sides {
        dif += verify_dif_bases(m, s, DEFAULT_TRIALS, seed)?;
    }
    let mut checks = vec![
        Check {
            name: "separations of the dual",
            cases: seps,
        },
        Check {
            name: "basis differences",
            cases: dif,
        },
    ];
    if m.is_connected() && n >= 2 {
        let sides: Vec<Subset> = both_orientations(&all).iter().map(|s| s.side_a).collect();
        let families = disjoint_families(&sides, 2);
        for family in &families {
            verify_local_dual(m, family)?;
        }
        checks.push(Check {
            name: "localization of the dual",
            cases: families.len(),
        });
    }
    if m.is_connected() && n >= 3 {
        let kinds = verify_dual_decomposition(m)?;
        checks.push(Check {
            name: "decomposition of the dual",
            cases: kinds.len(),
        });
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::k4_minus_edge;

    #[test]
    fn families() {
        let a = Subset::from_indices([0, 1]);
        let b = Subset::from_indices([2, 3]);
        let c = Subset::from_indices([1, 2]);
        let f = disjoint_families(&[a, b, c], 3);
        assert_eq!(f, vec![vec![], vec![a], vec![a, b], vec![b], vec![c]]);
    }

    #[test]
    fn k4e_passes_everything() {
        let checks = run_suite(&k4_minus_edge(), Suite::All, 7).unwrap();
        let get = |name: &str| checks.iter().find(|c| c.name == name).unwrap().cases;
        assert_eq!(get("split and 2-sum round trip"), 2);
        assert_eq!(get("canonical decomposition"), 3);
        assert!(get("switching lemma") > 0);
        assert!(get("local goodness correspondence") > 0);
    }

    #[test]
    fn crossing_lemmas_on_a_circuit() {
        let checks = separation_lemmas(&Matroid::uniform(4, 5).unwrap()).unwrap();
        let get = |name: &str| checks.iter().find(|c| c.name == name).unwrap().cases;
        assert!(get("corner lemma") > 0);
        assert!(get("symmetric difference lemma") > 0);
    }

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }
}
