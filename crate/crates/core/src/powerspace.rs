//! Smyth and Hoare power spaces over finite spaces.
//!
//! Power-space points are indexed: an [`IndexedSpace`] is an ordinary
//! [`FiniteSpace`] plus the table saying which subset of the base space each
//! point stands for. All topology on the power space goes through the index.

use std::collections::HashMap;
use std::sync::Arc;

use crate::caps;
use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::pointset::PointSet;
use crate::space::{FiniteSpace, SetFamily};
use crate::topology::{irreducible_against, is_irreducible};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedSpace {
    pub space: FiniteSpace,
    /// Meaning of each point as a subset of the base space.
    pub elems: Vec<PointSet>,
    index: HashMap<PointSet, usize>,
}

impl IndexedSpace {
    fn new(space: FiniteSpace, elems: Vec<PointSet>) -> Self {
        let index = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        IndexedSpace { space, elems, index }
    }

    pub fn index_of(&self, a: PointSet) -> Option<usize> {
        self.index.get(&a).copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Points whose meaning satisfies `pred`.
    pub fn select(&self, pred: impl Fn(PointSet) -> bool) -> PointSet {
        self.elems.iter().enumerate().filter(|(_, &e)| pred(e)).map(|(i, _)| i).collect()
    }

    /// `□U = { K : K ⊆ U }`
    pub fn boxed(&self, u: PointSet) -> PointSet {
        self.select(|e| e.is_subset(u))
    }

    /// `◇U = { A : A ∩ U ≠ ∅ }`
    pub fn diamond(&self, u: PointSet) -> PointSet {
        self.select(|e| e.meets(u))
    }
}

/// Every subset of a finite space is compact: any open cover is drawn from the
/// finite family `O(X)` and so is its own finite subcover. The check only
/// confirms that `O(X)` covers `a`.
pub fn is_compact(x: &FiniteSpace, a: PointSet) -> bool {
    let cover = x.opens().iter().filter(|u| u.meets(a)).fold(PointSet::EMPTY, |s, &u| s.union(u));
    a.is_subset(cover)
}

pub fn is_saturated(x: &FiniteSpace, a: PointSet) -> bool {
    x.saturation(a) == a
}

/// Supercompact: every open cover has a single member containing `k`.
///
/// The union of all opens not containing `k` is the largest cover that could
/// refute this, so testing it covers every family.
pub fn is_supercompact(x: &FiniteSpace, k: PointSet) -> bool {
    let refuting = x.opens().iter().filter(|u| !k.is_subset(**u)).fold(PointSet::EMPTY, |s, &u| s.union(u));
    !k.is_subset(refuting)
}

/// `K(X)`: nonempty compact saturated sets.
pub fn compact_saturated(x: &FiniteSpace) -> SetFamily {
    let order = x.specialization_order();
    let members = order
        .upsets()
        .expect("up-sets of a space's own order are within the open-family limit")
        .into_iter()
        .filter(|&a| !a.is_empty() && is_saturated(x, a) && is_compact(x, a))
        .collect();
    SetFamily::new(x.len(), members)
}

/// `P_S(X)` with points `K(X)` and base `{ □U : U ∈ O(X) }`.
pub fn smyth_space(x: &FiniteSpace) -> Result<IndexedSpace> {
    let ks = compact_saturated(x);
    caps::ensure("Smyth power space points", ks.len(), caps::POWER_SPACE_CAP)?;
    let elems = ks.members().to_vec();
    let pre = IndexedSpace::new(FiniteSpace::point(), elems.clone());
    let base: Vec<PointSet> = x.opens().iter().map(|&u| pre.boxed(u)).collect();
    let space = FiniteSpace::generate(elems.len(), &base)?;
    // the specialization order must be the Smyth order K1 ⊑ K2 ⟺ K2 ⊆ K1
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            if space.specialization_leq(i, j) != elems[j].is_subset(elems[i]) {
                return Err(Error::PremiseViolated("Smyth order mismatch".into()));
            }
        }
    }
    Ok(IndexedSpace::new(space, elems))
}

/// `ξ_X : x ↦ ↑x`
pub fn xi(x: &Arc<FiniteSpace>, ps: &IndexedSpace) -> Result<ContinuousMap> {
    let table = (0..x.len())
        .map(|p| ps.index_of(x.neighborhood(p)).ok_or_else(|| Error::PremiseViolated("↑x missing from K(X)".into())))
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(x.clone(), Arc::new(ps.space.clone()), table)
}

/// `P_H(G)` with opens `{ ◇U : U ∈ O(X) }`; `G` must consist of irreducible closed sets.
pub fn hoare_space(x: &FiniteSpace, g: &SetFamily) -> Result<IndexedSpace> {
    caps::ensure("Hoare power space points", g.len(), caps::POWER_SPACE_CAP)?;
    let closed = x.closed_sets();
    for a in g.iter() {
        if a.is_empty() || !x.is_closed(a) || !irreducible_against(&closed, a) {
            return Err(Error::NotIrreducibleFamily);
        }
    }
    let elems = g.members().to_vec();
    let pre = IndexedSpace::new(FiniteSpace::point(), elems.clone());
    let mut opens: Vec<PointSet> = x.opens().iter().map(|&u| pre.diamond(u)).collect();
    opens.sort_by_key(|s| s.canonical_key());
    opens.dedup();
    let space = FiniteSpace::from_opens(elems.len(), &opens)?;
    Ok(IndexedSpace::new(space, elems))
}

/// `η_X : x ↦ cl{x}`; requires `S_c(X) ⊆ G`.
pub fn eta(x: &Arc<FiniteSpace>, ph: &IndexedSpace) -> Result<ContinuousMap> {
    let table = (0..x.len())
        .map(|p| {
            ph.index_of(x.point_closure(p))
                .ok_or_else(|| Error::PremiseViolated("family does not contain every point closure".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    ContinuousMap::new(x.clone(), Arc::new(ph.space.clone()), table)
}

/// Does `⋂𝒜 = ⋂cl(𝒜)` hold, the closure taken in `P_S(X)`?
pub fn check_intersection_closure(x: &FiniteSpace, family: &SetFamily) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::EmptySet);
    }
    let ps = smyth_space(x)?;
    let pts = family
        .iter()
        .map(|k| ps.index_of(k).ok_or_else(|| Error::PremiseViolated(format!("{k:?} is not in K(X)"))))
        .collect::<Result<PointSet>>()?;
    let closure = ps.space.closure(pts);
    let lhs = family.intersection();
    let rhs = closure.iter().fold(x.full(), |s, i| s.intersection(ps.elems[i]));
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupReport {
    /// Least upper bound in `(K(X), ⊑)`, by brute force.
    pub sup: Option<PointSet>,
    pub intersection: PointSet,
    /// Sup exists exactly when the intersection lies in K(X), and then they coincide.
    pub agrees: bool,
}

pub fn check_sup_is_intersection(x: &FiniteSpace, family: &SetFamily) -> Result<SupReport> {
    if family.is_empty() {
        return Err(Error::EmptySet);
    }
    let ks = compact_saturated(x);
    for k in family.iter() {
        if !ks.contains(k) {
            return Err(Error::PremiseViolated(format!("{k:?} is not in K(X)")));
        }
    }
    // K1 ⊑ K2 ⟺ K2 ⊆ K1
    let above_all = |k: PointSet| family.iter().all(|m| k.is_subset(m));
    let ubs: Vec<PointSet> = ks.iter().filter(|&k| above_all(k)).collect();
    let sup = ubs.iter().copied().find(|&s| ubs.iter().all(|&u| u.is_subset(s)));
    let intersection = family.intersection();
    let agrees = match sup {
        Some(s) => ks.contains(intersection) && s == intersection,
        None => !ks.contains(intersection),
    };
    Ok(SupReport { sup, intersection, agrees })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionMapReport {
    pub members_checked: usize,
    /// Every `⋃𝒦` lies in `K(X)`.
    pub unions_compact_saturated: bool,
    /// Preimage of every base element `□U` is open in `P_S(P_S(X))`.
    pub continuous: bool,
}

/// `𝒦 ↦ ⋃𝒦` from `P_S(P_S(X))` to `P_S(X)`.
///
/// `P_S(P_S(X))` is never materialized: its points are enumerated, and
/// openness of a preimage is checked point by point by finding a basic
/// neighborhood `□𝒰` inside it.
pub fn union_map_check(x: &FiniteSpace) -> Result<UnionMapReport> {
    caps::ensure("union map base points", x.len(), caps::UNION_MAP_CAP)?;
    let ps = smyth_space(x)?;
    let outer = compact_saturated(&ps.space);
    let unions: Vec<PointSet> =
        outer.iter().map(|kk| kk.iter().fold(PointSet::EMPTY, |s, i| s.union(ps.elems[i]))).collect();
    let unions_compact_saturated = unions.iter().all(|&u| ps.index_of(u).is_some());

    let continuous = x.opens().iter().all(|&u| {
        let preimage: Vec<PointSet> =
            outer.iter().zip(&unions).filter(|(_, &un)| un.is_subset(u)).map(|(kk, _)| kk).collect();
        // □𝒰 in P_S(P_S(X)) = { 𝒦 : 𝒦 ⊆ 𝒰 }
        preimage.iter().all(|&kk| {
            ps.space
                .opens()
                .iter()
                .filter(|&&uu| kk.is_subset(uu))
                .any(|&uu| outer.iter().filter(|m| m.is_subset(uu)).all(|m| preimage.contains(&m)))
        })
    });
    Ok(UnionMapReport { members_checked: outer.len(), unions_compact_saturated, continuous })
}

/// Both sides of `A ∈ Irr(X) ⟺ ξ_X(A) ∈ Irr(P_S(X))` for a nonempty `a`.
pub fn xi_irreducibility(x: &FiniteSpace, ps: &IndexedSpace, a: PointSet) -> Result<(bool, bool)> {
    let lhs = is_irreducible(x, a)?;
    let img = a
        .iter()
        .map(|p| ps.index_of(x.neighborhood(p)).ok_or_else(|| Error::PremiseViolated("↑x missing".into())))
        .collect::<Result<PointSet>>()?;
    let rhs = is_irreducible(&ps.space, img)?;
    Ok((lhs, rhs))
}
