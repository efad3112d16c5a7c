//! Finite matroids represented by an explicit, canonically sorted circuit family.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Axiom, Error, Result};
use crate::subset::{all_subsets, k_subsets, Subset, MAX_GROUND};

/// Default bound on the ground-set size of any operation that enumerates subsets.
pub const DEFAULT_CAP: usize = 14;

/// How much of the circuit axioms to check at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValidationLevel {
    None,
    /// (C1) and (C2).
    #[default]
    Antichain,
    /// (C1), (C2) and pairwise finite elimination.
    Full,
}

impl FromStr for ValidationLevel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(ValidationLevel::None),
            "antichain" => Ok(ValidationLevel::Antichain),
            "full" => Ok(ValidationLevel::Full),
            other => Err(format!("unknown validation level {other:?}")),
        }
    }
}

/// A matroid on a labelled ground set, given by its circuits.
///
/// Elements are addressed internally by their position in the ground order;
/// every deterministic choice in the crate (greedy extensions, canonical
/// keys, listing orders) follows that order. The circuit family is stored
/// sorted by size and then lexicographically, so two matroids with the same
/// ground order and circuits have identical representations.
#[derive(Clone)]
pub struct Matroid {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    circuits: Vec<Subset>,
    cap: usize,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let circuits: Vec<Vec<&str>> = self
            .circuits
            .iter()
            .map(|c| c.iter().map(|i| self.labels[i].as_str()).collect())
            .collect();
        f.debug_struct("Matroid")
            .field("ground", &self.labels)
            .field("circuits", &circuits)
            .finish()
    }
}

pub(crate) fn sort_family(family: &mut Vec<Subset>) {
    family.sort_by(|a, b| a.canonical_cmp(*b));
    family.dedup();
}

fn check_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    if labels.len() > MAX_GROUND {
        return Err(Error::InvalidParams(format!(
            "ground set has {} elements, at most {MAX_GROUND} are supported",
            labels.len()
        )));
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateElement(l.clone()));
        }
    }
    Ok(index)
}

/// Checks (C1), (C2) and, at `Full`, pairwise elimination on a sorted family.
pub(crate) fn validate_family(family: &[Subset], level: ValidationLevel) -> Result<()> {
    if level == ValidationLevel::None {
        return Ok(());
    }
    if let Some(&c) = family.iter().find(|c| c.is_empty()) {
        return Err(Error::AxiomViolation {
            axiom: Axiom::C1,
            circuits: vec![c],
        });
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            // sorted by size, so only a ⊂ b is possible
            if a.is_proper_subset(b) {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::C2,
                    circuits: vec![a, b],
                });
            }
        }
    }
    if level == ValidationLevel::Full {
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                let union = a.union(b);
                for x in a.intersection(b).iter() {
                    let target = union.without(x);
                    if !family.iter().any(|c| c.is_subset(target)) {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::C3,
                            circuits: vec![a, b],
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Builds a matroid from a ground order and a circuit family over it.
    pub fn from_circuits(
        labels: Vec<String>,
        circuits: Vec<Subset>,
        level: ValidationLevel,
    ) -> Result<Matroid> {
        let index = check_labels(&labels)?;
        let ground = Subset::full(labels.len());
        if let Some(c) = circuits.iter().find(|c| !c.is_subset(ground)) {
            return Err(Error::InvalidParams(format!(
                "circuit {c:?} is not drawn from the ground set"
            )));
        }
        let mut circuits = circuits;
        sort_family(&mut circuits);
        validate_family(&circuits, level)?;
        Ok(Matroid {
            labels,
            index,
            circuits,
            cap: DEFAULT_CAP,
        })
    }

    /// Same as [`Matroid::from_circuits`] with circuits given by label.
    pub fn from_labeled_circuits<S: AsRef<str>>(
        ground: &[S],
        circuits: &[Vec<S>],
        level: ValidationLevel,
    ) -> Result<Matroid> {
        let labels: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
        let index = check_labels(&labels)?;
        let mut family = Vec::with_capacity(circuits.len());
        for c in circuits {
            let mut s = Subset::EMPTY;
            for l in c {
                let i = *index
                    .get(l.as_ref())
                    .ok_or_else(|| Error::UnknownElement(l.as_ref().to_string()))?;
                s = s.with(i);
            }
            family.push(s);
        }
        Matroid::from_circuits(labels, family, level)
    }

    /// Internal constructor for families already known to be canonical and valid.
    pub(crate) fn from_parts_unchecked(
        labels: Vec<String>,
        mut circuits: Vec<Subset>,
        cap: usize,
    ) -> Matroid {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        sort_family(&mut circuits);
        Matroid {
            labels,
            index,
            circuits,
            cap,
        }
    }

    /// The uniform matroid `U(r, n)` on elements `e0 .. e(n-1)`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n {
            return Err(Error::InvalidParams(format!("rank {r} exceeds size {n}")));
        }
        if n > MAX_GROUND {
            return Err(Error::InvalidParams(format!(
                "size {n} exceeds {MAX_GROUND}"
            )));
        }
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        let circuits = if r == n {
            Vec::new()
        } else {
            k_subsets(n, r + 1).collect()
        };
        Ok(Matroid::from_parts_unchecked(labels, circuits, DEFAULT_CAP))
    }

    /// Overrides the enumeration cap; derived matroids inherit it.
    pub fn with_cap(mut self, cap: usize) -> Matroid {
        self.cap = cap.min(MAX_GROUND);
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Fails with `GroundSetTooLarge` when the ground set exceeds the cap.
    pub fn check_cap(&self) -> Result<()> {
        if self.len() > self.cap {
            Err(Error::GroundSetTooLarge {
                size: self.len(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Resolves labels to a subset.
    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        labels.iter().try_fold(Subset::EMPTY, |s, l| {
            self.index_of(l.as_ref())
                .map(|i| s.with(i))
                .ok_or_else(|| Error::UnknownElement(l.as_ref().to_string()))
        })
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn is_circuit(&self, s: Subset) -> bool {
        self.circuits
            .binary_search_by(|c| c.canonical_cmp(s))
            .is_ok()
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(s))
    }

    /// Greedily extends independent `i ⊆ s` to a maximal independent subset of `s`,
    /// scanning `s` in ground order.
    pub fn extend_to_maximal_independent(&self, i: Subset, s: Subset) -> Result<Subset> {
        if !i.is_subset(s) {
            return Err(Error::PreconditionViolated(
                "independent set is not contained in the target set".into(),
            ));
        }
        if !self.is_independent(i) {
            return Err(Error::DependentInput);
        }
        Ok(self.greedy(i, s))
    }

    fn greedy(&self, mut b: Subset, s: Subset) -> Subset {
        for e in s.difference(b).iter() {
            let cand = b.with(e);
            // only circuits through e can appear
            if !self
                .circuits
                .iter()
                .any(|c| c.contains(e) && c.is_subset(cand))
            {
                b = cand;
            }
        }
        b
    }

    pub fn rank(&self, s: Subset) -> usize {
        self.greedy(Subset::EMPTY, s).len()
    }

    /// The unique circuit inside `b + e` through `e`.
    pub fn fundamental_circuit(&self, e: usize, b: Subset) -> Result<Subset> {
        if !self.is_independent(b) {
            return Err(Error::DependentInput);
        }
        if b.contains(e) {
            return Err(Error::PreconditionViolated(format!(
                "element {} lies in the independent set",
                self.labels[e]
            )));
        }
        let target = b.with(e);
        let mut found = self.circuits.iter().filter(|c| c.is_subset(target));
        match (found.next(), found.next()) {
            (None, _) => Err(Error::NotDependent),
            (Some(&c), None) => Ok(c),
            (Some(&c1), Some(&c2)) => Err(Error::LemmaFailure(format!(
                "two circuits {c1:?} and {c2:?} inside an independent set plus one element"
            ))),
        }
    }

    /// All bases, in increasing bitmask order.
    pub fn bases(&self) -> Result<Vec<Subset>> {
        self.check_cap()?;
        let r = self.rank(self.ground());
        Ok(k_subsets(self.len(), r)
            .filter(|&b| self.is_independent(b))
            .collect())
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.is_independent(s) && s.len() == self.rank(self.ground())
    }

    /// The dual matroid: its circuits are the minimal sets meeting every basis.
    pub fn dual(&self) -> Result<Matroid> {
        let bases = self.bases()?;
        let n = self.len();
        let mut cocircuits: Vec<Subset> = Vec::new();
        for k in 1..=n {
            for d in k_subsets(n, k) {
                if cocircuits.iter().any(|c| c.is_subset(d)) {
                    continue;
                }
                if bases.iter().all(|b| b.meets(d)) {
                    cocircuits.push(d);
                }
            }
        }
        Ok(Matroid::from_parts_unchecked(
            self.labels.clone(),
            cocircuits,
            self.cap,
        ))
    }

    /// `M|S`, with the ground order of `S` inherited from `M`.
    pub fn restriction(&self, s: Subset) -> Matroid {
        let members = s.to_vec();
        let mut pos = [usize::MAX; MAX_GROUND];
        for (j, &i) in members.iter().enumerate() {
            pos[i] = j;
        }
        let remap = |c: Subset| Subset::from_indices(c.iter().map(|i| pos[i]));
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.is_subset(s))
            .map(|&c| remap(c))
            .collect();
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        Matroid::from_parts_unchecked(labels, circuits, self.cap)
    }

    /// `M/S`, computed as the dual of `M*|S∁`.
    pub fn contraction(&self, s: Subset) -> Result<Matroid> {
        let rest = s.complement(self.len());
        self.dual()?.restriction(rest).dual()
    }

    /// `M\S` (deletion), the restriction to the complement.
    pub fn deletion(&self, s: Subset) -> Matroid {
        self.restriction(s.complement(self.len()))
    }

    /// Every two elements lie on a common circuit.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                let pair = Subset::from_indices([x, y]);
                self.circuits.iter().any(|c| pair.is_subset(*c))
            })
        })
    }

    pub fn loops(&self) -> Subset {
        self.circuits
            .iter()
            .filter(|c| c.len() == 1)
            .fold(Subset::EMPTY, |a, &c| a.union(c))
    }

    pub fn coloops(&self) -> Subset {
        let covered = self.circuits.iter().fold(Subset::EMPTY, |a, &c| a.union(c));
        self.ground().difference(covered)
    }

    /// Whether the whole ground set is a circuit.
    pub fn is_circuit_matroid(&self) -> bool {
        !self.is_empty() && self.circuits.len() == 1 && self.circuits[0] == self.ground()
    }

    /// Renames elements; `f` receives the old label.
    pub fn relabel<F: FnMut(&str) -> String>(&self, mut f: F) -> Result<Matroid> {
        let labels: Vec<String> = self.labels.iter().map(|l| f(l)).collect();
        check_labels(&labels)?;
        Ok(Matroid::from_parts_unchecked(
            labels,
            self.circuits.clone(),
            self.cap,
        ))
    }

    /// Disjoint union of two matroids; labels must not collide.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        check_labels(&labels)?;
        if labels.len() > MAX_GROUND {
            return Err(Error::InvalidParams("direct sum too large".into()));
        }
        let mut circuits = self.circuits.clone();
        circuits.extend(other.circuits.iter().map(|c| Subset(c.0 << n)));
        Ok(Matroid::from_parts_unchecked(labels, circuits, self.cap))
    }

    /// The same matroid with its ground set re-ordered to `order`
    /// (a permutation of the current labels).
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<Matroid> {
        if order.len() != self.len() {
            return Err(Error::InvalidParams(
                "reordering is not a permutation".into(),
            ));
        }
        let mut pos = vec![usize::MAX; self.len()];
        for (j, l) in order.iter().enumerate() {
            let i = self
                .index_of(l.as_ref())
                .ok_or_else(|| Error::UnknownElement(l.as_ref().to_string()))?;
            if pos[i] != usize::MAX {
                return Err(Error::DuplicateElement(l.as_ref().to_string()));
            }
            pos[i] = j;
        }
        let circuits = self
            .circuits
            .iter()
            .map(|c| Subset::from_indices(c.iter().map(|i| pos[i])))
            .collect();
        let labels = order.iter().map(|l| l.as_ref().to_string()).collect();
        Ok(Matroid::from_parts_unchecked(labels, circuits, self.cap))
    }

    /// Equality as labelled matroids, ignoring ground order.
    pub fn same_as(&self, other: &Matroid) -> bool {
        if self.len() != other.len() {
            return false;
        }
        match other.reordered(&self.labels) {
            Ok(o) => o.circuits == self.circuits,
            Err(_) => false,
        }
    }

    /// Rank of every subset, indexed by bitmask.
    pub fn rank_table(&self) -> Result<Vec<u8>> {
        self.check_cap()?;
        Ok(all_subsets(self.len())
            .map(|s| self.rank(s) as u8)
            .collect())
    }
}

/// Orders two circuit families canonically, for comparisons in tests and reports.
pub fn compare_families(a: &[Subset], b: &[Subset]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.canonical_cmp(*y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}
