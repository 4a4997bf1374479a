//! Order-derived topologies and the basic order-theoretic predicates on
//! finite spaces: directed sets, irreducible sets, sobriety.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::FinitePoset;
use crate::space::{FiniteSpace, SetFamily};

/// Point-count cap for operations that walk every subset of the points.
pub const SUBSET_WALK_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TopologyKind {
    Alexandroff,
    Scott,
    OmegaScott,
    Lower,
    Lawson,
}

impl std::str::FromStr for TopologyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "alexandroff" => TopologyKind::Alexandroff,
            "scott" => TopologyKind::Scott,
            "omega-scott" => TopologyKind::OmegaScott,
            "lower" => TopologyKind::Lower,
            "lawson" => TopologyKind::Lawson,
            other => return Err(Error::Parse(format!("unknown topology kind {other:?}"))),
        })
    }
}

fn check_walk_cap(n: usize) -> Result<()> {
    if n > SUBSET_WALK_CAP {
        return Err(Error::CapExceeded { what: "subset enumeration", size: n, cap: SUBSET_WALK_CAP });
    }
    Ok(())
}

/// A directed subset together with its largest element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectedSet {
    pub set: PointSet,
    pub max: usize,
}

/// Every nonempty directed subset of a poset, with its maximum.
pub fn poset_directed_subsets(p: &FinitePoset) -> Result<Vec<DirectedSet>> {
    check_walk_cap(p.len())?;
    Ok(PointSet::full(p.len())
        .subsets()
        .filter(|&d| p.is_directed(d))
        .map(|d| DirectedSet { set: d, max: p.greatest_of(d).expect("finite directed set has a largest element") })
        .collect())
}

/// Directed subsets with their suprema, for sets whose supremum exists.
fn directed_with_sup(p: &FinitePoset) -> Result<Vec<(PointSet, usize)>> {
    check_walk_cap(p.len())?;
    Ok(PointSet::full(p.len())
        .subsets()
        .filter(|&d| p.is_directed(d))
        .filter_map(|d| p.sup(d).map(|s| (d, s)))
        .collect())
}

/// Up-sets `U` with `sup D ∈ U ⇒ D ∩ U ≠ ∅` for every directed `D` whose
/// supremum exists. Every finite set is countable, so the same routine
/// computes both the Scott and the omega-Scott open families.
fn scott_opens(p: &FinitePoset) -> Result<Vec<PointSet>> {
    let directed = directed_with_sup(p)?;
    Ok(p.upsets()?.into_iter().filter(|&u| directed.iter().all(|&(d, s)| !u.contains(s) || d.meets(u))).collect())
}

/// Is `u` omega-Scott open in the poset (checked against every directed set)?
pub fn is_omega_scott_open(p: &FinitePoset, u: PointSet) -> Result<bool> {
    if !p.is_upset(u) {
        return Ok(false);
    }
    Ok(directed_with_sup(p)?.iter().all(|&(d, s)| !u.contains(s) || d.meets(u)))
}

/// Subbasis of the lower topology: complements of principal filters.
fn lower_subbasis(p: &FinitePoset) -> Vec<PointSet> {
    (0..p.len()).map(|x| p.up(x).complement(p.len())).collect()
}

pub fn poset_topology(p: &FinitePoset, kind: TopologyKind) -> Result<FiniteSpace> {
    let n = p.len();
    match kind {
        TopologyKind::Alexandroff => Ok(FiniteSpace::alexandroff(p)),
        TopologyKind::Scott | TopologyKind::OmegaScott => FiniteSpace::from_opens(n, &scott_opens(p)?),
        TopologyKind::Lower => FiniteSpace::generate(n, &lower_subbasis(p)),
        TopologyKind::Lawson => {
            let mut sub = scott_opens(p)?;
            sub.extend(lower_subbasis(p));
            FiniteSpace::generate(n, &sub)
        }
    }
}

pub fn is_directed(x: &FiniteSpace, a: PointSet) -> bool {
    if a.is_empty() {
        return false;
    }
    let pts = a.to_vec();
    pts.iter().enumerate().all(|(k, &p)| {
        pts[k..].iter().all(|&q| a.iter().any(|r| x.specialization_leq(p, r) && x.specialization_leq(q, r)))
    })
}

/// All nonempty directed subsets, each with its maximum.
pub fn directed_subsets(x: &FiniteSpace) -> Result<Vec<DirectedSet>> {
    check_walk_cap(x.len())?;
    Ok(x.full()
        .subsets()
        .filter(|&d| is_directed(x, d))
        .map(|d| {
            let max = d
                .iter()
                .find(|&m| d.iter().all(|y| x.specialization_leq(y, m)))
                .expect("finite directed set has a largest element");
            DirectedSet { set: d, max }
        })
        .collect())
}

/// Irreducibility by definition: `A ⊆ F1 ∪ F2` forces `A ⊆ F1` or `A ⊆ F2`
/// for every pair of closed sets.
pub fn is_irreducible(x: &FiniteSpace, a: PointSet) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(irreducible_against(&x.closed_sets(), a))
}

pub(crate) fn irreducible_against(closed: &[PointSet], a: PointSet) -> bool {
    // Only closed sets that miss part of A can refute.
    let partial: Vec<PointSet> = closed.iter().copied().filter(|&f| !a.is_subset(f)).collect();
    partial.iter().enumerate().all(|(i, &f1)| partial[i..].iter().all(|&f2| !a.is_subset(f1.union(f2))))
}

/// `Irr_c(X)`.
pub fn irreducible_sets(x: &FiniteSpace) -> SetFamily {
    let closed = x.closed_sets();
    let members = closed.iter().copied().filter(|&c| !c.is_empty() && irreducible_against(&closed, c)).collect();
    SetFamily::new(x.len(), members)
}

/// `S_c(X)`.
pub fn point_closure_family(x: &FiniteSpace) -> SetFamily {
    SetFamily::new(x.len(), x.point_closures())
}

/// `D_c(X)`: closures of directed subsets. On finite spaces every set is
/// countable, so this is also `D_c^ω(X)`.
pub fn directed_closures(x: &FiniteSpace) -> Result<SetFamily> {
    let members = directed_subsets(x)?.into_iter().map(|d| x.closure(d.set)).collect();
    Ok(SetFamily::new(x.len(), members))
}

/// A generic point of `a`: the unique `x` with `cl{x} = a`.
pub fn generic_point(x: &FiniteSpace, a: PointSet) -> Option<usize> {
    let mut found = (0..x.len()).filter(|&p| x.point_closure(p) == a);
    let first = found.next()?;
    debug_assert!(found.next().is_none(), "T0 forces uniqueness");
    Some(first)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoberVerdict {
    pub sober: bool,
    /// `(A, generic point)` for every `A ∈ Irr_c(X)`, `None` if A has none.
    pub generic_points: Vec<(PointSet, Option<usize>)>,
}

pub fn sober_check(x: &FiniteSpace) -> SoberVerdict {
    let generic_points: Vec<_> = irreducible_sets(x).iter().map(|a| (a, generic_point(x, a))).collect();
    let sober = generic_points.iter().all(|(_, g)| g.is_some());
    SoberVerdict { sober, generic_points }
}

/// Every countable directed subset has a largest element. Finite posets have
/// only finitely many subsets, so all of them are inspected.
pub fn is_omega_noetherian(p: &FinitePoset) -> Result<bool> {
    check_walk_cap(p.len())?;
    Ok(PointSet::full(p.len()).subsets().filter(|&d| p.is_directed(d)).all(|d| p.greatest_of(d).is_some()))
}

/// `x ≪_ω x`: for every countable directed `D` with a supremum,
/// `x <= sup D` implies `x <= d` for some `d ∈ D`.
pub fn is_omega_compact(p: &FinitePoset, x: usize) -> Result<bool> {
    Ok(directed_with_sup(p)?.iter().all(|&(d, s)| !p.leq(x, s) || d.iter().any(|e| p.leq(x, e))))
}

/// Is every countable directed subset's supremum defined?
pub fn is_omega_dcpo(p: &FinitePoset) -> Result<bool> {
    check_walk_cap(p.len())?;
    Ok(PointSet::full(p.len()).subsets().filter(|&d| p.is_directed(d)).all(|d| p.sup(d).is_some()))
}
