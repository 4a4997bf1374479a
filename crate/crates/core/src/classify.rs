//! Space properties decided from their definitions on finite spaces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::caps;
use crate::certificate::{Certificate, SpaceSpec};
use crate::error::Result;
use crate::pointset::PointSet;
use crate::powerspace::{compact_saturated, is_compact, smyth_space};
use crate::space::FiniteSpace;
use crate::topology::{
    directed_subsets, generic_point, irreducible_sets, is_directed, is_irreducible, is_omega_scott_open,
    point_closure_family, sober_check, DirectedSet, SUBSET_WALK_CAP,
};

pub const SOBER: &str = "sober";
pub const D_SPACE: &str = "d-space";
pub const OMEGA_D_SPACE: &str = "omega-d-space";
pub const WELL_FILTERED: &str = "well-filtered";
pub const OMEGA_WELL_FILTERED: &str = "omega-well-filtered";
pub const FIRST_COUNTABLE: &str = "first-countable";
pub const COMPACT: &str = "compact";
pub const LOCALLY_COMPACT: &str = "locally-compact";
pub const CORE_COMPACT: &str = "core-compact";
pub const LOCALLY_HYPERCOMPACT: &str = "locally-hypercompact";
pub const C_SPACE: &str = "c-space";

pub const PROPERTIES: [&str; 11] = [
    SOBER,
    D_SPACE,
    OMEGA_D_SPACE,
    WELL_FILTERED,
    OMEGA_WELL_FILTERED,
    FIRST_COUNTABLE,
    COMPACT,
    LOCALLY_COMPACT,
    CORE_COMPACT,
    LOCALLY_HYPERCOMPACT,
    C_SPACE,
];

/// Largest `|K(X)|` for which every subfamily is enumerated.
pub const EXHAUSTIVE_FAMILY_CAP: usize = 20;
/// Largest `|K(X)|` for which the classifier enumerates every family.
pub const WF_EXHAUSTIVE_CAP: usize = 16;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub verdicts: BTreeMap<String, bool>,
    pub certificates: BTreeMap<String, Certificate>,
}

impl PropertyReport {
    pub fn holds(&self, property: &str) -> bool {
        self.verdicts.get(property).copied().unwrap_or(false)
    }

    fn record(&mut self, property: &str, refutation: Option<Certificate>) {
        self.verdicts.insert(property.to_string(), refutation.is_none());
        if let Some(c) = refutation {
            self.certificates.insert(property.to_string(), c);
        }
    }
}

/// How filtered families of `K(X)` are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FilterMode {
    /// A finite filtered family contains a member below all others, so the
    /// families are represented by that member alone.
    LeastMember,
    /// Every subfamily of `K(X)`, filteredness tested directly.
    Exhaustive,
    /// Strictly descending chains only.
    Chains,
}

pub fn classify(x: &FiniteSpace) -> Result<PropertyReport> {
    classify_with(x, FilterMode::LeastMember)
}

pub fn classify_with(x: &FiniteSpace, mode: FilterMode) -> Result<PropertyReport> {
    caps::ensure("classified space points", x.len(), caps::core_cap())?;
    let directed = directed_subsets(x)?;
    let mut r = PropertyReport::default();
    r.record(SOBER, sober_refutation(x));
    r.record(D_SPACE, d_space_refutation(x, &directed));
    r.record(OMEGA_D_SPACE, omega_d_refutation(x, &directed));
    r.record(WELL_FILTERED, filtered_refutation(x, well_filtered_mode(x))?);
    r.record(OMEGA_WELL_FILTERED, filtered_refutation(x, mode)?);
    r.record(FIRST_COUNTABLE, first_countable_refutation(x));
    r.record(COMPACT, (!is_compact(x, x.full())).then(|| counterexample(x, COMPACT, vec![x.full()])));
    r.record(LOCALLY_COMPACT, locally_compact_refutation(x));
    r.record(CORE_COMPACT, core_compact_refutation(x));
    r.record(LOCALLY_HYPERCOMPACT, locally_hypercompact_refutation(x));
    r.record(C_SPACE, c_space_refutation(x));
    Ok(r)
}

fn counterexample(x: &FiniteSpace, property: &str, witness: Vec<PointSet>) -> Certificate {
    Certificate::FiniteCounterexample { space: SpaceSpec::of(x), property: property.to_string(), witness }
}

fn sober_refutation(x: &FiniteSpace) -> Option<Certificate> {
    let v = sober_check(x);
    v.generic_points
        .iter()
        .find(|(_, g)| g.is_none())
        .map(|&(closed, _)| Certificate::FiniteNotSober { space: SpaceSpec::of(x), closed })
}

/// Every directed set has a closure with a generic point.
fn d_space_refutation(x: &FiniteSpace, directed: &[DirectedSet]) -> Option<Certificate> {
    directed
        .iter()
        .find(|d| generic_point(x, x.closure(d.set)).is_none())
        .map(|d| Certificate::FiniteNotDSpace { space: SpaceSpec::of(x), directed: d.set })
}

/// `D_c^ω(X) = S_c(X)`: every directed set is countable here, and each
/// closure must be a point closure.
fn omega_d_refutation(x: &FiniteSpace, directed: &[DirectedSet]) -> Option<Certificate> {
    let sc = point_closure_family(x);
    directed
        .iter()
        .find(|d| !sc.contains(x.closure(d.set)))
        .map(|d| Certificate::FiniteNotDSpace { space: SpaceSpec::of(x), directed: d.set })
}

fn not_wf_certificate(x: &FiniteSpace, family: Vec<PointSet>, open: PointSet) -> Certificate {
    let witnesses = family.iter().map(|k| k.difference(open).first().expect("member not inside U")).collect();
    Certificate::FiniteNotOmegaWf { space: SpaceSpec::of(x), family, open, witnesses }
}

/// An open `U ⊇ ⋂family` containing no member.
fn violating_open(x: &FiniteSpace, family: &[PointSet]) -> Option<PointSet> {
    let meet = family.iter().fold(x.full(), |s, &k| s.intersection(k));
    x.opens().iter().copied().find(|&u| meet.is_subset(u) && !family.iter().any(|k| k.is_subset(u)))
}

/// Families for the well-filtered verdict: every filtered subfamily while
/// `K(X)` is small, least members beyond that.
pub fn well_filtered_mode(x: &FiniteSpace) -> FilterMode {
    if compact_saturated(x).len() <= WF_EXHAUSTIVE_CAP {
        FilterMode::Exhaustive
    } else {
        FilterMode::LeastMember
    }
}

/// Well-filteredness by enumeration of filtered families in `K(X)` against all opens.
pub fn filtered_refutation(x: &FiniteSpace, mode: FilterMode) -> Result<Option<Certificate>> {
    let ks = compact_saturated(x);
    let members = ks.members();
    match mode {
        FilterMode::LeastMember => {
            // the family {K, ...} with least member K has intersection K
            Ok(members.iter().find_map(|&k| violating_open(x, &[k]).map(|u| not_wf_certificate(x, vec![k], u))))
        }
        FilterMode::Exhaustive => {
            caps::ensure("exhaustive filtered families", members.len(), EXHAUSTIVE_FAMILY_CAP)?;
            let m = members.len();
            // lower[i][j]: members contained in K_i ∩ K_j
            let lower: Vec<Vec<u32>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            let meet = members[i].intersection(members[j]);
                            (0..m).filter(|&c| members[c].is_subset(meet)).fold(0u32, |s, c| s | (1 << c))
                        })
                        .collect()
                })
                .collect();
            for fam in 1u32..(1u32 << m) {
                let idx: Vec<usize> = (0..m).filter(|&i| fam & (1 << i) != 0).collect();
                let filtered = idx.iter().all(|&i| idx.iter().all(|&j| lower[i][j] & fam != 0));
                if !filtered {
                    continue;
                }
                let family: Vec<PointSet> = idx.iter().map(|&i| members[i]).collect();
                if let Some(u) = violating_open(x, &family) {
                    return Ok(Some(not_wf_certificate(x, family, u)));
                }
            }
            Ok(None)
        }
        FilterMode::Chains => {
            caps::ensure("descending chains", members.len(), EXHAUSTIVE_FAMILY_CAP)?;
            let mut stack: Vec<Vec<usize>> = (0..members.len()).map(|i| vec![i]).collect();
            while let Some(chain) = stack.pop() {
                let family: Vec<PointSet> = chain.iter().map(|&i| members[i]).collect();
                if let Some(u) = violating_open(x, &family) {
                    return Ok(Some(not_wf_certificate(x, family, u)));
                }
                let last = members[*chain.last().expect("nonempty")];
                for (j, &k) in members.iter().enumerate() {
                    if k != last && k.is_subset(last) {
                        let mut next = chain.clone();
                        next.push(j);
                        stack.push(next);
                    }
                }
            }
            Ok(None)
        }
    }
}

/// The intersection of the opens containing `x` is itself open, giving a
/// one-element base at `x`.
fn first_countable_refutation(x: &FiniteSpace) -> Option<Certificate> {
    (0..x.len()).find_map(|p| {
        let minimal = x.opens().iter().filter(|u| u.contains(p)).fold(x.full(), |s, &u| s.intersection(u));
        (!x.is_open(minimal)).then(|| counterexample(x, FIRST_COUNTABLE, vec![PointSet::singleton(p), minimal]))
    })
}

/// Pairs `(x, U)` with `x ∈ U` open.
fn point_neighbourhoods(x: &FiniteSpace) -> impl Iterator<Item = (usize, PointSet)> + '_ {
    x.opens().iter().flat_map(|&u| u.iter().map(move |p| (p, u)))
}

/// `x ∈ int K ⊆ K ⊆ U` for some `K ∈ K(X)`.
fn locally_compact_refutation(x: &FiniteSpace) -> Option<Certificate> {
    let ks = compact_saturated(x);
    point_neighbourhoods(x)
        .find(|&(p, u)| !ks.iter().any(|k| k.is_subset(u) && x.interior(k).contains(p)))
        .map(|(p, u)| counterexample(x, LOCALLY_COMPACT, vec![PointSet::singleton(p), u]))
}

/// `x ∈ int ↑F ⊆ U` for a finite `F ⊆ U`, trying singletons first.
fn locally_hypercompact_refutation(x: &FiniteSpace) -> Option<Certificate> {
    let works = |p: usize, u: PointSet, f: PointSet| {
        let up = x.saturation(f);
        up.is_subset(u) && x.interior(up).contains(p)
    };
    point_neighbourhoods(x)
        .find(|&(p, u)| {
            let singles = u.iter().any(|q| works(p, u, PointSet::singleton(q)));
            !singles && !u.subsets().skip(1).any(|f| works(p, u, f))
        })
        .map(|(p, u)| counterexample(x, LOCALLY_HYPERCOMPACT, vec![PointSet::singleton(p), u]))
}

/// `x ∈ int ↑u ⊆ ↑u ⊆ U` for some point `u`.
fn c_space_refutation(x: &FiniteSpace) -> Option<Certificate> {
    point_neighbourhoods(x)
        .find(|&(p, u)| {
            !u.iter().any(|q| {
                let up = x.neighborhood(q);
                up.is_subset(u) && x.interior(up).contains(p)
            })
        })
        .map(|(p, u)| counterexample(x, C_SPACE, vec![PointSet::singleton(p), u]))
}

/// `U ≪ V` in `O(X)`: every directed family of opens whose union covers `V`
/// has a member containing `U`.
///
/// A directed family of opens is finite, so it has a largest member `W ⊇ V`,
/// and the singleton `{W}` is the hardest family with that largest member.
pub fn way_below(x: &FiniteSpace, u: PointSet, v: PointSet) -> bool {
    x.opens().iter().filter(|w| v.is_subset(**w)).all(|w| u.is_subset(*w))
}

/// `O(X)` is continuous: each open is the union of the opens way below it.
fn core_compact_refutation(x: &FiniteSpace) -> Option<Certificate> {
    x.opens()
        .iter()
        .find(|&&v| {
            let approx = x.opens().iter().filter(|&&u| way_below(x, u, v)).fold(PointSet::EMPTY, |s, &u| s.union(u));
            approx != v
        })
        .map(|&v| counterexample(x, CORE_COMPACT, vec![v]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaDReport {
    /// The six equivalent conditions, each evaluated on its own.
    pub conditions: [bool; 6],
}

impl OmegaDReport {
    pub fn agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

/// `⋂_{d∈D} ↑d`
fn upper_meet(x: &FiniteSpace, d: PointSet) -> PointSet {
    d.iter().fold(x.full(), |s, p| s.intersection(x.neighborhood(p)))
}

pub fn omega_d_conditions(x: &FiniteSpace) -> Result<OmegaDReport> {
    let directed = directed_subsets(x)?;
    let closed = x.closed_sets();
    let irr_closed = irreducible_sets(x);
    let order = x.specialization_order();

    let c1 = directed.iter().all(|d| generic_point(x, x.closure(d.set)).is_some());
    let omega_dcpo = directed.iter().all(|d| order.sup(d.set).is_some());
    let opens_omega_scott = x.opens().iter().map(|&u| is_omega_scott_open(&order, u)).collect::<Result<Vec<_>>>()?;
    let c2 = omega_dcpo && opens_omega_scott.into_iter().all(|b| b);
    let c3 = directed.iter().all(|d| {
        let meet = upper_meet(x, d.set);
        x.opens().iter().filter(|u| meet.is_subset(**u)).all(|u| d.set.meets(*u))
    });
    let c4 = directed.iter().all(|d| {
        let meet = upper_meet(x, d.set);
        closed.iter().filter(|a| d.set.is_subset(**a)).all(|a| a.meets(meet))
    });
    let c5 = directed.iter().all(|d| {
        let meet = upper_meet(x, d.set);
        irr_closed.iter().filter(|a| d.set.is_subset(*a)).all(|a| a.meets(meet))
    });
    let c6 = directed.iter().all(|d| x.closure(d.set).meets(upper_meet(x, d.set)));
    Ok(OmegaDReport { conditions: [c1, c2, c3, c4, c5, c6] })
}

pub fn omega_d_equivalences(x: &FiniteSpace) -> Result<bool> {
    Ok(omega_d_conditions(x)?.agree())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmythTransfer {
    pub base_omega_wf: bool,
    pub smyth_omega_d: bool,
    pub smyth_omega_wf: bool,
}

impl SmythTransfer {
    pub fn agree(&self) -> bool {
        self.base_omega_wf == self.smyth_omega_d && self.smyth_omega_d == self.smyth_omega_wf
    }
}

/// `X` ω-well-filtered, `P_S(X)` an ω-d-space, `P_S(X)` ω-well-filtered.
pub fn smyth_transfer_conditions(x: &FiniteSpace, mode: FilterMode) -> Result<SmythTransfer> {
    caps::ensure("Smyth transfer base points", x.len(), caps::SMYTH_TRANSFER_CAP)?;
    let ps = smyth_space(x)?;
    let pspace = &ps.space;
    let directed = directed_subsets(pspace)?;
    Ok(SmythTransfer {
        base_omega_wf: filtered_refutation(x, mode)?.is_none(),
        smyth_omega_d: omega_d_refutation(pspace, &directed).is_none(),
        smyth_omega_wf: filtered_refutation(pspace, FilterMode::LeastMember)?.is_none(),
    })
}

pub fn smyth_transfer(x: &FiniteSpace) -> Result<bool> {
    Ok(smyth_transfer_conditions(x, FilterMode::LeastMember)?.agree())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedIrreducibles {
    /// Every irreducible subset has a directed closure.
    pub closures_directed: bool,
    pub sober: bool,
    pub well_filtered: bool,
    pub omega_wf_d_space: bool,
}

impl DirectedIrreducibles {
    pub fn all_pass(&self) -> bool {
        self.closures_directed && self.sober == self.well_filtered && self.well_filtered == self.omega_wf_d_space
    }
}

pub fn directed_irreducibles_conditions(x: &FiniteSpace) -> Result<DirectedIrreducibles> {
    caps::ensure("irreducible subset walk", x.len(), SUBSET_WALK_CAP)?;
    let mut closures_directed = true;
    for a in x.full().subsets().skip(1) {
        if is_irreducible(x, a)? && !is_directed(x, x.closure(a)) {
            closures_directed = false;
            break;
        }
    }
    let directed = directed_subsets(x)?;
    let omega_wf_d_space =
        filtered_refutation(x, FilterMode::LeastMember)?.is_none() && d_space_refutation(x, &directed).is_none();
    Ok(DirectedIrreducibles {
        closures_directed,
        sober: sober_refutation(x).is_none(),
        well_filtered: filtered_refutation(x, FilterMode::Chains)?.is_none(),
        omega_wf_d_space,
    })
}

pub fn directed_irreducibles_check(x: &FiniteSpace) -> Result<bool> {
    Ok(directed_irreducibles_conditions(x)?.all_pass())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_spaces_have_every_property() {
        for x in [FiniteSpace::point(), FiniteSpace::sierpinski(), FiniteSpace::v_space(), FiniteSpace::discrete(3)] {
            for mode in [FilterMode::LeastMember, FilterMode::Exhaustive, FilterMode::Chains] {
                let r = classify_with(&x, mode).unwrap();
                for p in PROPERTIES {
                    assert!(r.holds(p), "{p} fails on {x:?}");
                }
                assert!(r.certificates.is_empty());
            }
        }
    }

    #[test]
    fn prop_conditions_on_v() {
        let r = omega_d_conditions(&FiniteSpace::v_space()).unwrap();
        assert_eq!(r.conditions, [true; 6]);
        assert!(smyth_transfer(&FiniteSpace::sierpinski()).unwrap());
        assert!(directed_irreducibles_check(&FiniteSpace::v_space()).unwrap());
    }

    #[test]
    fn way_below_is_inclusion_on_finite_lattices() {
        let x = FiniteSpace::v_space();
        for &u in x.opens() {
            for &v in x.opens() {
                assert_eq!(way_below(&x, u, v), u.is_subset(v));
            }
        }
    }
}
