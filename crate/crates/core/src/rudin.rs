//! Minimal closed sets meeting a family of compact saturated sets.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps;
use crate::classify::{filtered_refutation, FilterMode, EXHAUSTIVE_FAMILY_CAP};
use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::pointset::PointSet;
use crate::powerspace::{compact_saturated, smyth_space};
use crate::product::ProductSpace;
use crate::space::{FiniteSpace, SetFamily};
use crate::topology::{directed_closures, irreducible_sets, is_irreducible, point_closure_family};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RudinProblem {
    pub base: FiniteSpace,
    pub family: SetFamily,
    pub closed: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RudinSolution {
    pub minimal_members: Vec<PointSet>,
    pub irreducible_flags: Vec<bool>,
}

impl RudinSolution {
    pub fn has_irreducible(&self) -> bool {
        self.irreducible_flags.iter().any(|&b| b)
    }
}

impl RudinProblem {
    pub fn new(base: FiniteSpace, family: SetFamily, closed: PointSet) -> Result<Self> {
        let p = RudinProblem { base, family, closed };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let x = &self.base;
        if self.family.is_empty() {
            return Err(Error::EmptySet);
        }
        let ks = compact_saturated(x);
        if let Some(k) = self.family.iter().find(|&k| !ks.contains(k)) {
            return Err(Error::PremiseViolated(format!("{k:?} is not compact saturated")));
        }
        if !x.is_closed(self.closed) {
            return Err(Error::PremiseViolated(format!("{:?} is not closed", self.closed)));
        }
        if let Some(k) = self.family.iter().find(|k| !k.meets(self.closed)) {
            return Err(Error::PremiseViolated(format!("closed set misses {k:?}")));
        }
        if !family_irreducible_in_smyth(x, &self.family)? {
            return Err(Error::FamilyNotIrreducible);
        }
        Ok(())
    }
}

/// Is the family irreducible as a subset of `P_S(X)`?
///
/// `P_S(X)` is a finite T0 space, so its closed sets are the down-sets of
/// `⊑` and a subset is irreducible iff it has a `⊑`-greatest element: a
/// member contained in every other member.
pub fn family_irreducible_in_smyth(x: &FiniteSpace, family: &SetFamily) -> Result<bool> {
    let ks = compact_saturated(x);
    if let Some(k) = family.iter().find(|&k| !ks.contains(k)) {
        return Err(Error::PremiseViolated(format!("{k:?} not in K(X)")));
    }
    Ok(family.iter().any(|k0| family.iter().all(|k| k0.is_subset(k))))
}

/// [`family_irreducible_in_smyth`] by the definition, on the materialized `P_S(X)`.
pub fn family_irreducible_in_smyth_by_definition(x: &FiniteSpace, family: &SetFamily) -> Result<bool> {
    let ps = smyth_space(x)?;
    let pts = family
        .iter()
        .map(|k| ps.index_of(k).ok_or_else(|| Error::PremiseViolated(format!("{k:?} not in K(X)"))))
        .collect::<Result<PointSet>>()?;
    if pts.is_empty() {
        return Err(Error::EmptySet);
    }
    is_irreducible(&ps.space, pts)
}

fn meets_all(family: &SetFamily, a: PointSet) -> bool {
    family.iter().all(|k| k.meets(a))
}

/// `M(𝒦)`: closed sets meeting every member.
#[allow(non_snake_case)]
pub fn M_family(x: &FiniteSpace, family: &SetFamily) -> SetFamily {
    SetFamily::new(x.len(), x.closed_sets().into_iter().filter(|&a| meets_all(family, a)).collect())
}

/// `m(𝒦)`: inclusion-minimal members of `M(𝒦)`.
pub fn m_family(x: &FiniteSpace, family: &SetFamily) -> SetFamily {
    let big = M_family(x, family);
    let minimal = big.iter().filter(|&a| !big.iter().any(|b| b != a && b.is_subset(a))).collect();
    SetFamily::new(x.len(), minimal)
}

/// Removing a maximal point of a closed set leaves a closed set, and every
/// closed subset is reached that way. Meeting every member is upward
/// closed, so a closed set is minimal iff no such child still meets them.
fn descend(x: &FiniteSpace, family: &SetFamily, from: PointSet) -> Vec<PointSet> {
    let order = x.specialization_order();
    let mut seen = HashSet::new();
    let mut stack = vec![from];
    let mut minimal = Vec::new();
    seen.insert(from);
    while let Some(b) = stack.pop() {
        let mut has_child = false;
        for m in order.maximal_elements(b).iter() {
            let child = b.without(m);
            if meets_all(family, child) {
                has_child = true;
                if seen.insert(child) {
                    stack.push(child);
                }
            }
        }
        if !has_child {
            minimal.push(b);
        }
    }
    crate::pointset::canonicalize(&mut minimal);
    minimal
}

pub fn rudin_search(p: &RudinProblem) -> Result<RudinSolution> {
    p.validate()?;
    let minimal_members = descend(&p.base, &p.family, p.closed);
    let irreducible_flags =
        minimal_members.iter().map(|&a| is_irreducible(&p.base, a)).collect::<Result<Vec<bool>>>()?;
    let sol = RudinSolution { minimal_members, irreducible_flags };
    if !sol.has_irreducible() {
        return Err(Error::PremiseViolated("no minimal member is irreducible".into()));
    }
    Ok(sol)
}

/// `RD_ω(X)`: a finite filtered family contains its least member `K`, and
/// `m(𝒦) = m({K})`, so singleton families suffice.
pub fn rd_omega(x: &FiniteSpace) -> SetFamily {
    let mut out = Vec::new();
    for k in compact_saturated(x).iter() {
        out.extend(m_family(x, &SetFamily::new(x.len(), vec![k])).iter());
    }
    SetFamily::new(x.len(), out)
}

/// `RD_ω(X)` over every filtered subfamily of `K(X)`.
pub fn rd_omega_exhaustive(x: &FiniteSpace) -> Result<SetFamily> {
    let ks = compact_saturated(x);
    let members = ks.members();
    caps::ensure("exhaustive filtered families", members.len(), EXHAUSTIVE_FAMILY_CAP)?;
    let m = members.len();
    let mut out = BTreeSet::new();
    for fam in 1u32..(1u32 << m) {
        let chosen: Vec<PointSet> = (0..m).filter(|&i| fam & (1 << i) != 0).map(|i| members[i]).collect();
        let filtered =
            chosen.iter().all(|&a| chosen.iter().all(|&b| chosen.iter().any(|&c| c.is_subset(a.intersection(b)))));
        if filtered {
            for a in m_family(x, &SetFamily::new(x.len(), chosen)).iter() {
                out.insert(a.canonical_key());
            }
        }
    }
    Ok(SetFamily::new(x.len(), out.into_iter().map(|(_, bits)| PointSet::from_bits(bits)).collect()))
}

/// `WD_ω(X)`. There is no direct decision procedure: the definition ranges
/// over all ω-well-filtered spaces. Finite `T₀` spaces are sober, and then
/// `S_c ⊆ WD_ω ⊆ Irr_c = S_c`. [`wd_refutation`] tests the definition
/// against concrete targets and can only falsify.
pub fn wd_omega(x: &FiniteSpace) -> SetFamily {
    point_closure_family(x)
}

/// A candidate set whose image closure under a map into an ω-well-filtered
/// target is not a point closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WdRefutation {
    pub set: PointSet,
    pub target: usize,
    pub table: Vec<usize>,
}

pub fn wd_refutation(
    x: &Arc<FiniteSpace>,
    candidates: &SetFamily,
    targets: &[Arc<FiniteSpace>],
) -> Result<Option<WdRefutation>> {
    for (t, y) in targets.iter().enumerate() {
        if filtered_refutation(y, FilterMode::LeastMember)?.is_some() {
            return Err(Error::NotOmegaWf);
        }
        for f in ContinuousMap::enumerate(x, y)? {
            if let Some(a) = candidates.iter().find(|&a| !wd_image_is_point_closure(&f, a)) {
                return Ok(Some(WdRefutation { set: a, target: t, table: f.table().to_vec() }));
            }
        }
    }
    Ok(None)
}

fn wd_image_is_point_closure(f: &ContinuousMap, a: PointSet) -> bool {
    let cl = f.image_closure(a);
    (0..f.cod().len()).any(|y| f.cod().point_closure(y) == cl)
}

/// `cl f(A) ∈ RD_ω(Y)` for `A ∈ RD_ω(X)`.
pub fn rd_image_check(f: &ContinuousMap, a: PointSet) -> Result<bool> {
    if !rd_omega(f.dom()).contains(a) {
        return Err(Error::PremiseViolated(format!("{a:?} is not in RD_ω")));
    }
    Ok(rd_omega(f.cod()).contains(f.image_closure(a)))
}

/// `cl f(A) ∈ WD_ω(Y)` for `A ∈ WD_ω(X)`.
pub fn wd_image_check(f: &ContinuousMap, a: PointSet) -> Result<bool> {
    if !wd_omega(f.dom()).contains(a) {
        return Err(Error::PremiseViolated(format!("{a:?} is not in WD_ω")));
    }
    Ok(wd_omega(f.cod()).contains(f.image_closure(a)))
}

/// The five families `S_c ⊆ D_c^ω ⊆ RD_ω ⊆ WD_ω ⊆ Irr_c`, each computed separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyChain {
    pub sc: SetFamily,
    pub dc_omega: SetFamily,
    pub rd_omega: SetFamily,
    pub wd_omega: SetFamily,
    pub irr_c: SetFamily,
}

impl FamilyChain {
    pub fn compute(x: &FiniteSpace) -> Result<Self> {
        Ok(FamilyChain {
            sc: point_closure_family(x),
            dc_omega: directed_closures(x)?,
            rd_omega: rd_omega(x),
            wd_omega: wd_omega(x),
            irr_c: irreducible_sets(x),
        })
    }

    fn links(&self) -> [(&SetFamily, &SetFamily); 4] {
        [
            (&self.sc, &self.dc_omega),
            (&self.dc_omega, &self.rd_omega),
            (&self.rd_omega, &self.wd_omega),
            (&self.wd_omega, &self.irr_c),
        ]
    }

    pub fn inclusions_hold(&self) -> bool {
        self.links().iter().all(|(a, b)| a.is_subfamily_of(b))
    }

    pub fn all_equal(&self) -> bool {
        self.links().iter().all(|(a, b)| a == b)
    }
}

/// Sober, and ω-WF together with `Irr_c = D_c^ω`, `= RD_ω`, `= WD_ω`.
pub fn sobriety_characterizations(x: &FiniteSpace) -> Result<[bool; 4]> {
    let chain = FamilyChain::compute(x)?;
    let omega_wf = filtered_refutation(x, FilterMode::LeastMember)?.is_none();
    let sober = crate::topology::sober_check(x).sober;
    Ok([
        sober,
        omega_wf && chain.irr_c == chain.dc_omega,
        omega_wf && chain.irr_c == chain.rd_omega,
        omega_wf && chain.irr_c == chain.wd_omega,
    ])
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRudinReport {
    pub irreducible_closed: usize,
    /// `A ∈ RD_ω ⟺ every p_i(A) ∈ RD_ω(X_i)`.
    pub rd_factorizes: bool,
    /// `A ∈ WD_ω ⟺ every p_i(A) ∈ WD_ω(X_i)`.
    pub wd_factorizes: bool,
    /// `A = ∏ p_i(A)`.
    pub boxes: bool,
}

impl ProductRudinReport {
    pub fn all_pass(&self) -> bool {
        self.rd_factorizes && self.wd_factorizes && self.boxes
    }
}

pub fn product_rudin_checks(xs: &[Arc<FiniteSpace>]) -> Result<ProductRudinReport> {
    let p = ProductSpace::new(xs.to_vec())?;
    let x = &p.space;
    let (rd, wd) = (rd_omega(x), wd_omega(x));
    let factor_rd: Vec<SetFamily> = xs.iter().map(|f| rd_omega(f)).collect();
    let factor_wd: Vec<SetFamily> = xs.iter().map(|f| wd_omega(f)).collect();
    let mut report = ProductRudinReport { rd_factorizes: true, wd_factorizes: true, boxes: true, ..Default::default() };
    for a in irreducible_sets(x).iter() {
        report.irreducible_closed += 1;
        let parts: Vec<PointSet> = (0..p.arity()).map(|i| p.project(i, a)).collect();
        report.boxes &= p.boxed(&parts) == a;
        let all_rd = parts.iter().zip(&factor_rd).all(|(&pi, fam)| fam.contains(pi));
        let all_wd = parts.iter().zip(&factor_wd).all(|(&pi, fam)| fam.contains(pi));
        report.rd_factorizes &= rd.contains(a) == all_rd;
        report.wd_factorizes &= wd.contains(a) == all_wd;
    }
    Ok(report)
}
