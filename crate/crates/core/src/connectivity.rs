//! The rank-free connectivity function and separations.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{all_subsets, Subset};

/// A bipartition `(side_a, side_b)` of the ground set of order `order`,
/// i.e. `φ(side_a) = order - 1` with both sides of size at least `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Separation {
    pub side_a: Subset,
    pub side_b: Subset,
    pub order: usize,
}

impl Separation {
    pub fn ground(&self) -> Subset {
        self.side_a.union(self.side_b)
    }

    /// `(side_b, side_a)`.
    pub fn inverse(&self) -> Separation {
        Separation {
            side_a: self.side_b,
            side_b: self.side_a,
            order: self.order,
        }
    }

    pub fn key(&self) -> SeparationKey {
        SeparationKey::of(self.side_a, self.ground())
    }

    /// The orientation whose `side_a` is the canonical key.
    pub fn canonical(&self) -> Separation {
        if self.key().0 == self.side_a {
            *self
        } else {
            self.inverse()
        }
    }
}

/// Identifies a separation up to inversion: the side holding the least
/// element of the ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeparationKey(pub Subset);

impl SeparationKey {
    pub fn of(side: Subset, ground: Subset) -> SeparationKey {
        match ground.first() {
            Some(least) if !side.contains(least) => SeparationKey(ground.difference(side)),
            _ => SeparationKey(side),
        }
    }

    pub fn side(&self) -> Subset {
        self.0
    }
}

/// `del(I, J)`: the least number of elements to delete from `I ∪ J` to make
/// it independent, computed as `|I ∪ J| - r(I ∪ J)`.
pub fn del(m: &Matroid, i: Subset, j: Subset) -> Result<usize> {
    if !m.is_independent(i) || !m.is_independent(j) {
        return Err(Error::DependentInput);
    }
    let u = i.union(j);
    Ok(u.len() - m.rank(u))
}

/// `φ(X) = del(B_X, B_X∁)` for greedily chosen bases of `M|X` and `M|X∁`.
pub fn phi(m: &Matroid, x: Subset) -> usize {
    let xc = x.complement(m.len());
    let bx = m.rank_basis(x);
    let bxc = m.rank_basis(xc);
    // both are independent by construction
    let u = bx.union(bxc);
    u.len() - m.rank(u)
}

/// `r(X) + r(X∁) - r(E)`.
pub fn phi_by_rank(m: &Matroid, x: Subset) -> usize {
    let xc = x.complement(m.len());
    m.rank(x) + m.rank(xc) - m.rank(m.ground())
}

impl Matroid {
    /// Greedy basis of `M|S`.
    pub fn rank_basis(&self, s: Subset) -> Subset {
        self.extend_to_maximal_independent(Subset::EMPTY, s)
            .expect("the empty set is independent")
    }
}

/// The separation induced by `X`, or `None` when a side is too small for its order.
pub fn separation_of(m: &Matroid, x: Subset) -> Option<Separation> {
    let k = phi(m, x);
    let xc = x.complement(m.len());
    (x.len() > k && xc.len() > k).then_some(Separation {
        side_a: x,
        side_b: xc,
        order: k + 1,
    })
}

/// All separations of the given order, one per key, in canonical order.
pub fn enumerate_separations(m: &Matroid, order: usize) -> Result<Vec<Separation>> {
    m.check_cap()?;
    if m.is_empty() || order == 0 {
        return Ok(Vec::new());
    }
    let ranks = m.rank_table()?;
    let full = m.ground();
    let total = ranks[full.0 as usize] as usize;
    let mut out: Vec<Separation> = all_subsets(m.len())
        .filter(|x| x.contains(0))
        .filter_map(|x| {
            let xc = x.complement(m.len());
            let k = ranks[x.0 as usize] as usize + ranks[xc.0 as usize] as usize - total;
            (k + 1 == order && x.len() >= order && xc.len() >= order).then_some(Separation {
                side_a: x,
                side_b: xc,
                order,
            })
        })
        .collect();
    out.sort_by(|a, b| a.side_a.canonical_cmp(b.side_a));
    Ok(out)
}

/// All 2-separations, canonical orientation and order.
pub fn enumerate_2separations(m: &Matroid) -> Result<Vec<Separation>> {
    enumerate_separations(m, 2)
}

/// Whether `M` has no separation of order less than `n`.
pub fn is_n_connected(m: &Matroid, n: usize) -> Result<bool> {
    m.check_cap()?;
    for order in 1..n {
        if !enumerate_separations(m, order)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}
