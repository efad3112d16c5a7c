//! Nestedness and crossing of separations, the corner and symmetric
//! difference constructions, good 2-separations, and circuit switching.

use crate::connectivity::{enumerate_2separations, phi, Separation};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// The four pairwise intersections of the sides of two separations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadrants {
    pub q11: Subset,
    pub q12: Subset,
    pub q21: Subset,
    pub q22: Subset,
}

impl Quadrants {
    pub fn of(s1: &Separation, s2: &Separation) -> Result<Quadrants> {
        if s1.ground() != s2.ground() {
            return Err(Error::GroundSetMismatch);
        }
        Ok(Quadrants {
            q11: s1.side_a.intersection(s2.side_a),
            q12: s1.side_a.intersection(s2.side_b),
            q21: s1.side_b.intersection(s2.side_a),
            q22: s1.side_b.intersection(s2.side_b),
        })
    }

    pub fn all_nonempty(&self) -> bool {
        [self.q11, self.q12, self.q21, self.q22]
            .iter()
            .all(|q| !q.is_empty())
    }
}

/// Some quadrant is empty.
pub fn are_nested(s1: &Separation, s2: &Separation) -> Result<bool> {
    Ok(!Quadrants::of(s1, s2)?.all_nonempty())
}

fn require_2sep(m: &Matroid, side: Subset, what: &str) -> Result<()> {
    let comp = side.complement(m.len());
    if side.len() < 2 || comp.len() < 2 || phi(m, side) != 1 {
        return Err(Error::PreconditionViolated(format!(
            "{what} is not a 2-separation"
        )));
    }
    Ok(())
}

fn crossing_2seps(m: &Matroid, s1: &Separation, s2: &Separation) -> Result<()> {
    if s1.ground() != m.ground() || s2.ground() != m.ground() {
        return Err(Error::GroundSetMismatch);
    }
    require_2sep(m, s1.side_a, "first separation")?;
    require_2sep(m, s2.side_a, "second separation")?;
    if are_nested(s1, s2)? {
        return Err(Error::NotCrossing);
    }
    Ok(())
}

/// For crossing 2-separations whose corner `S1 ∩ S2` and its complement both
/// have at least two elements, returns the 2-separation `(S1 ∩ S2, ·)`.
pub fn corner(m: &Matroid, s1: &Separation, s2: &Separation) -> Result<Separation> {
    crossing_2seps(m, s1, s2)?;
    let side = s1.side_a.intersection(s2.side_a);
    let comp = side.complement(m.len());
    if side.len() < 2 || comp.len() < 2 {
        return Err(Error::QuadrantTooSmall);
    }
    let k = phi(m, side);
    if k != 1 {
        return Err(Error::LemmaFailure(format!(
            "corner {side:?} of crossing 2-separations has connectivity {k}"
        )));
    }
    Ok(Separation {
        side_a: side,
        side_b: comp,
        order: 2,
    })
}

/// For crossing 2-separations returns the 2-separation `(S1 Δ S2, ·)`.
pub fn symmetric_difference_sep(
    m: &Matroid,
    s1: &Separation,
    s2: &Separation,
) -> Result<Separation> {
    crossing_2seps(m, s1, s2)?;
    let side = s1.side_a.symmetric_difference(s2.side_a);
    let comp = side.complement(m.len());
    let k = phi(m, side);
    if k != 1 || side.len() < 2 || comp.len() < 2 {
        return Err(Error::LemmaFailure(format!(
            "symmetric difference {side:?} of crossing 2-separations has connectivity {k}"
        )));
    }
    Ok(Separation {
        side_a: side,
        side_b: comp,
        order: 2,
    })
}

/// Whether `s` is nested with every separation in `all2seps`.
pub fn is_good(s: &Separation, all2seps: &[Separation]) -> bool {
    all2seps.iter().all(|t| are_nested(s, t).unwrap_or(false))
}

/// The good 2-separations of a connected matroid, canonical keys in canonical order.
pub fn good_2separations(m: &Matroid) -> Result<Vec<Separation>> {
    m.check_cap()?;
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = enumerate_2separations(m)?;
    Ok(all.iter().filter(|s| is_good(s, &all)).copied().collect())
}

/// `C` meets both sides of `s`.
pub fn crosses_circuit(c: Subset, s: &Separation) -> bool {
    c.meets(s.side_a) && c.meets(s.side_b)
}

/// `(C1 ∩ S) ∪ (C2 ∩ S∁)` for circuits `C1, C2` crossing the 2-separation `s`.
pub fn switch_circuits(m: &Matroid, c1: Subset, c2: Subset, s: &Separation) -> Result<Subset> {
    for c in [c1, c2] {
        if !m.is_circuit(c) {
            return Err(Error::NotACircuit(c));
        }
        if !crosses_circuit(c, s) {
            return Err(Error::NotCrossing);
        }
    }
    require_2sep(m, s.side_a, "separation")?;
    let out = c1.intersection(s.side_a).union(c2.intersection(s.side_b));
    if !m.is_circuit(out) {
        return Err(Error::LemmaFailure(format!(
            "switching {c1:?} and {c2:?} across {:?} gives non-circuit {out:?}",
            s.side_a
        )));
    }
    Ok(out)
}

/// `(C1 ∩ ⋃Sᵢ) ∪ (C2 ∩ (⋃Sᵢ)∁)` for a disjoint family of 2-separation sides,
/// with `C1, C2` crossing every `(Sᵢ, Sᵢ∁)` and `C2` meeting `(⋃Sᵢ)∁`
/// whenever `C1` does.
pub fn infinite_switch(m: &Matroid, c1: Subset, c2: Subset, family: &[Subset]) -> Result<Subset> {
    for c in [c1, c2] {
        if !m.is_circuit(c) {
            return Err(Error::NotACircuit(c));
        }
    }
    let n = m.len();
    let mut union = Subset::EMPTY;
    for (i, &x) in family.iter().enumerate() {
        if union.meets(x) {
            return Err(Error::PreconditionViolated("family members overlap".into()));
        }
        require_2sep(m, x, &format!("family member {i}"))?;
        union = union.union(x);
        let sep = Separation {
            side_a: x,
            side_b: x.complement(n),
            order: 2,
        };
        if !crosses_circuit(c1, &sep) || !crosses_circuit(c2, &sep) {
            return Err(Error::PreconditionViolated(format!(
                "condition (1): a circuit does not cross family member {i}"
            )));
        }
    }
    let outside = union.complement(n);
    if c1.meets(outside) && !c2.meets(outside) {
        return Err(Error::PreconditionViolated(
            "condition (2): C1 meets the outside of the family but C2 does not".into(),
        ));
    }
    let out = c1.intersection(union).union(c2.intersection(outside));
    if !m.is_circuit(out) {
        return Err(Error::LemmaFailure(format!(
            "switching {c1:?} and {c2:?} across {family:?} gives non-circuit {out:?}"
        )));
    }
    Ok(out)
}
