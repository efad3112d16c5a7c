//! Localizations at disjoint families of 2-separation sides, and 2-sums.
//!
//! Localizing `M` at `U = {X_0, .., X_k}` keeps the real elements
//! `R(U) = E(M) ∖ ⋃Xᵢ` and replaces each member `Xᵢ` by one virtual element.
//! Its circuits are the images of the circuits of `M` not contained in any
//! member. In the local ground order the real elements come first (in the
//! order of `M`), followed by one virtual per member in family order.

use crate::connectivity::{enumerate_2separations, phi, separation_of, Separation};
use crate::error::{Error, Result};
use crate::matroid::{sort_family, validate_family, Matroid, ValidationLevel};
use crate::separation::is_good;
use crate::subset::{Subset, MAX_GROUND};

/// An element of the local ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalElement {
    /// An element of `R(U)`, by its index in the base matroid.
    Real(usize),
    /// The element standing in for family member `i`.
    Virtual(usize),
}

/// Default label of the virtual element for family member `i`.
pub fn virtual_label(i: usize) -> String {
    format!("@e{i}")
}

#[derive(Debug, Clone)]
pub struct Localization {
    base: Matroid,
    family: Vec<Subset>,
    local: Matroid,
    elements: Vec<LocalElement>,
    real: Subset,
    /// Local index of each base element (its own index if real, its member's virtual otherwise).
    image_of: Vec<usize>,
    /// Order-2 separations witnessing that each member is a 2-separation side.
    witnesses: Vec<Separation>,
}

/// Localizes `m` at `family`, naming the virtual for member `i` `@e{i}`.
pub fn localize(m: &Matroid, family: &[Subset]) -> Result<Localization> {
    let labels = (0..family.len()).map(virtual_label).collect();
    localize_labeled(m, family, labels)
}

/// Localizes with caller-chosen virtual labels (one per family member).
pub fn localize_labeled(
    m: &Matroid,
    family: &[Subset],
    virtual_labels: Vec<String>,
) -> Result<Localization> {
    if virtual_labels.len() != family.len() {
        return Err(Error::InvalidParams(
            "one virtual label per family member".into(),
        ));
    }
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut union = Subset::EMPTY;
    for &x in family {
        if union.meets(x) {
            return Err(Error::FamilyNotDisjoint);
        }
        union = union.union(x);
    }
    let mut witnesses = Vec::with_capacity(family.len());
    for (i, &x) in family.iter().enumerate() {
        match separation_of(m, x) {
            Some(sep) if sep.order == 2 => witnesses.push(sep),
            _ => return Err(Error::NotA2Separation(i)),
        }
    }
    let real = union.complement(m.len());
    if real.len() + family.len() > MAX_GROUND {
        return Err(Error::InvalidParams("local ground set too large".into()));
    }

    let mut elements: Vec<LocalElement> = real.iter().map(LocalElement::Real).collect();
    elements.extend((0..family.len()).map(LocalElement::Virtual));
    let mut image_of = vec![usize::MAX; m.len()];
    for (j, e) in real.iter().enumerate() {
        image_of[e] = j;
    }
    for (i, &x) in family.iter().enumerate() {
        for e in x.iter() {
            image_of[e] = real.len() + i;
        }
    }
    let mut labels: Vec<String> = real.iter().map(|e| m.label(e).to_string()).collect();
    labels.extend(virtual_labels);

    let image = |y: Subset| Subset::from_indices(y.iter().map(|e| image_of[e]));
    let mut circuits: Vec<Subset> = m
        .circuits()
        .iter()
        .filter(|c| !family.iter().any(|x| c.is_subset(*x)))
        .map(|&c| image(c))
        .collect();
    sort_family(&mut circuits);
    validate_family(&circuits, ValidationLevel::Antichain).map_err(|e| {
        Error::LemmaFailure(format!("localized circuit family is not a clutter: {e}"))
    })?;
    let local = Matroid::from_circuits(labels, circuits, ValidationLevel::None)?.with_cap(m.cap());

    Ok(Localization {
        base: m.clone(),
        family: family.to_vec(),
        local,
        elements,
        real,
        image_of,
        witnesses,
    })
}

impl Localization {
    pub fn base(&self) -> &Matroid {
        &self.base
    }

    pub fn family(&self) -> &[Subset] {
        &self.family
    }

    /// The local matroid `M_U`.
    pub fn local(&self) -> &Matroid {
        &self.local
    }

    pub fn into_local(self) -> Matroid {
        self.local
    }

    pub fn elements(&self) -> &[LocalElement] {
        &self.elements
    }

    /// `R(U)`, as a subset of the base ground set.
    pub fn real(&self) -> Subset {
        self.real
    }

    pub fn witnesses(&self) -> &[Separation] {
        &self.witnesses
    }

    /// Local index of the virtual element for member `i`.
    pub fn virtual_index(&self, i: usize) -> usize {
        self.real.len() + i
    }

    /// `φ_U(Y) = {vᵢ : Y ∩ Xᵢ ≠ ∅} ∪ (Y ∩ R(U))`.
    pub fn phi_u(&self, y: Subset) -> Subset {
        Subset::from_indices(y.iter().map(|e| self.image_of[e]))
    }

    /// `φ_U⁻¹(Z)`: each virtual is replaced by its whole member.
    pub fn phi_u_inverse(&self, z: Subset) -> Subset {
        z.iter()
            .fold(Subset::EMPTY, |acc, j| match self.elements[j] {
                LocalElement::Real(e) => acc.with(e),
                LocalElement::Virtual(i) => acc.union(self.family[i]),
            })
    }

    fn member_is_spanned(&self, i: Subset, member: Subset) -> bool {
        let trace = i.intersection(member);
        trace.len() == self.base.rank(member) && self.base.is_independent(trace)
    }

    /// `(I ∩ R(U)) ∪ {vᵢ : I ∩ Xᵢ is a basis of M|Xᵢ}` for `I` independent in `M`.
    pub fn local_independents_correspond(&self, i: Subset) -> Result<Subset> {
        if !self.base.is_independent(i) {
            return Err(Error::DependentInput);
        }
        let out = self.image_of_independent(i);
        if !self.local.is_independent(out) {
            return Err(Error::LemmaFailure(format!(
                "image {out:?} of independent {i:?} is dependent in the localization"
            )));
        }
        Ok(out)
    }

    fn image_of_independent(&self, i: Subset) -> Subset {
        let mut out = self.phi_u(i.intersection(self.real));
        for (k, &x) in self.family.iter().enumerate() {
            if self.member_is_spanned(i, x) {
                out = out.with(self.virtual_index(k));
            }
        }
        out
    }

    /// Bases of the localization, computed directly and checked against the
    /// images of the bases of `M`.
    pub fn local_bases(&self) -> Result<Vec<Subset>> {
        let direct = self.local.bases()?;
        let mut images: Vec<Subset> = self
            .base
            .bases()?
            .into_iter()
            .map(|b| self.image_of_independent(b))
            .collect();
        images.sort_by_key(|s| s.0);
        images.dedup();
        if images != direct {
            return Err(Error::LemmaFailure(format!(
                "local bases {direct:?} differ from images of bases {images:?}"
            )));
        }
        Ok(direct)
    }

    /// The 2-separation of `M` corresponding to the local bipartition
    /// `(S_U, S_U∁)`, if either is a 2-separation; disagreement between the
    /// two sides is a `LemmaFailure`.
    pub fn project_2sep(&self, s_u: Subset) -> Result<Option<Separation>> {
        let nl = self.local.len();
        let comp = s_u.complement(nl);
        if s_u.len() < 2 || comp.len() < 2 {
            return Ok(None);
        }
        let local_ok = phi(&self.local, s_u) == 1;
        let pre = self.phi_u_inverse(s_u);
        let base_sep = separation_of(&self.base, pre).filter(|s| s.order == 2);
        match (local_ok, base_sep) {
            (true, Some(sep)) => Ok(Some(sep)),
            (false, None) => Ok(None),
            (l, b) => Err(Error::LemmaFailure(format!(
                "local side {s_u:?} is a 2-separation: {l}, its preimage {pre:?}: {}",
                b.is_some()
            ))),
        }
    }

    /// Verifies that `(S_U, S_U∁)` is a 2-separation of the localization,
    /// given a 2-separation `s` of `M` with `S_U ⊆ φ_U(s.side_a)`.
    pub fn lift_2sep_subset(&self, s: &Separation, s_u: Subset) -> Result<Separation> {
        let n = self.base.len();
        if s.ground() != self.base.ground()
            || s.side_a.len() < 2
            || s.side_b.len() < 2
            || phi(&self.base, s.side_a) != 1
        {
            return Err(Error::PreconditionViolated(
                "not a 2-separation of the base matroid".into(),
            ));
        }
        debug_assert_eq!(s.side_a.complement(n), s.side_b);
        if !s_u.is_subset(self.phi_u(s.side_a)) {
            return Err(Error::PreconditionViolated(format!(
                "{s_u:?} is not inside the image of {:?}",
                s.side_a
            )));
        }
        let comp = s_u.complement(self.local.len());
        if s_u.len() < 2 || comp.len() < 2 {
            return Err(Error::PreconditionViolated(
                "local sides must have at least two elements".into(),
            ));
        }
        let k = phi(&self.local, s_u);
        if k != 1 {
            return Err(Error::LemmaFailure(format!(
                "{s_u:?} inside the image of a 2-separation has local connectivity {k}"
            )));
        }
        Ok(Separation {
            side_a: s_u,
            side_b: comp,
            order: 2,
        })
    }

    /// Whether the local 2-separation `(S_U, S_U∁)` is good, after checking
    /// that its preimage in `M` is good exactly when it is.
    pub fn goodness_corresponds(&self, s_u: Subset) -> Result<bool> {
        let local_all = enumerate_2separations(&self.local)?;
        let base_all = enumerate_2separations(&self.base)?;
        self.goodness_corresponds_given(s_u, &local_all, &base_all)
    }

    /// [`Localization::goodness_corresponds`] with the 2-separations of the
    /// localization and of `M` supplied by the caller.
    pub fn goodness_corresponds_given(
        &self,
        s_u: Subset,
        local_all: &[Separation],
        base_all: &[Separation],
    ) -> Result<bool> {
        let comp = s_u.complement(self.local.len());
        if s_u.len() < 2 || comp.len() < 2 || phi(&self.local, s_u) != 1 {
            return Err(Error::PreconditionViolated(format!(
                "{s_u:?} is not a 2-separation of the localization"
            )));
        }
        let local_sep = Separation {
            side_a: s_u,
            side_b: comp,
            order: 2,
        };
        let local_good = is_good(&local_sep, local_all);
        let pre = self.phi_u_inverse(s_u);
        let base_sep = separation_of(&self.base, pre)
            .filter(|s| s.order == 2)
            .ok_or_else(|| {
                Error::LemmaFailure(format!("preimage {pre:?} is not a 2-separation"))
            })?;
        let base_good = is_good(&base_sep, base_all);
        if local_good != base_good {
            return Err(Error::LemmaFailure(format!(
                "local 2-separation {s_u:?} good: {local_good}, preimage {pre:?} good: {base_good}"
            )));
        }
        Ok(local_good)
    }
}

/// The 2-sum of two matroids sharing exactly the element labelled `e`.
pub fn two_sum(m1: &Matroid, m2: &Matroid, e: &str) -> Result<Matroid> {
    let shared: Vec<&String> = m1
        .labels()
        .iter()
        .filter(|l| m2.index_of(l).is_some())
        .collect();
    if shared.len() != 1 || shared[0] != e {
        return Err(Error::BadSharedElement(format!(
            "expected exactly {e:?} in common, found {shared:?}"
        )));
    }
    let (e1, e2) = (m1.index_of(e).unwrap(), m2.index_of(e).unwrap());
    for (m, x) in [(m1, e1), (m2, e2)] {
        if m.loops().contains(x) || m.coloops().contains(x) {
            return Err(Error::BadSharedElement(format!(
                "{e:?} is a loop or coloop"
            )));
        }
    }
    let n1 = m1.len() - 1;
    if n1 + m2.len() - 1 > MAX_GROUND {
        return Err(Error::InvalidParams("2-sum too large".into()));
    }
    // drop e from each side and shift the second side past the first
    let squeeze = |c: Subset, x: usize| {
        let low = c.0 & ((1u64 << x) - 1);
        let high = (c.0 >> (x + 1)) << x;
        Subset(low | high)
    };
    let side1 = |c: Subset| squeeze(c, e1);
    let side2 = |c: Subset| Subset(squeeze(c, e2).0 << n1);

    let mut circuits: Vec<Subset> = Vec::new();
    circuits.extend(
        m1.circuits()
            .iter()
            .filter(|c| !c.contains(e1))
            .map(|&c| side1(c)),
    );
    circuits.extend(
        m2.circuits()
            .iter()
            .filter(|c| !c.contains(e2))
            .map(|&c| side2(c)),
    );
    for &c1 in m1.circuits().iter().filter(|c| c.contains(e1)) {
        for &c2 in m2.circuits().iter().filter(|c| c.contains(e2)) {
            circuits.push(side1(c1).union(side2(c2)));
        }
    }
    let mut labels: Vec<String> = m1.labels().iter().filter(|l| *l != e).cloned().collect();
    labels.extend(m2.labels().iter().filter(|l| *l != e).cloned());
    Ok(Matroid::from_circuits(labels, circuits, ValidationLevel::Antichain)?.with_cap(m1.cap()))
}

/// Label of the shared element when splitting along a separation.
pub fn split_label(s: &Separation) -> String {
    format!("@s:{:x}", s.key().side().bits())
}

/// Splits `m` along a 2-separation into `M1` on `S + e` and `M2` on `S∁ + e`
/// with `two_sum(M1, M2, e) = m`. Returns `(M1, M2, e)`.
pub fn split_along(m: &Matroid, s: &Separation) -> Result<(Matroid, Matroid, String)> {
    if s.ground() != m.ground() || separation_of(m, s.side_a).map(|x| x.order) != Some(2) {
        return Err(Error::NotA2Separation(0));
    }
    let e = split_label(s);
    let m1 = localize_labeled(m, &[s.side_b], vec![e.clone()])?.into_local();
    let m2 = localize_labeled(m, &[s.side_a], vec![e.clone()])?.into_local();
    let back = two_sum(&m1, &m2, &e)?;
    if !back.same_as(m) {
        return Err(Error::LemmaFailure(format!(
            "2-sum of the split along {:?} does not reproduce the matroid",
            s.side_a
        )));
    }
    Ok((m1, m2, e))
}
