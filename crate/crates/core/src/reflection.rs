//! Sobrification and the ω-well-filtered reflection `X^{ω-w} = P_H(WD_ω(X))`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps;
use crate::classify::{
    classify, filtered_refutation, FilterMode, COMPACT, CORE_COMPACT, C_SPACE, LOCALLY_COMPACT, LOCALLY_HYPERCOMPACT,
    SOBER,
};
use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::pointset::PointSet;
use crate::powerspace::{eta, hoare_space, IndexedSpace};
use crate::product::ProductSpace;
use crate::rudin::{rd_omega, wd_omega};
use crate::space::{FiniteSpace, SetFamily};
use crate::topology::{generic_point, irreducible_sets, is_irreducible, point_closure_family, SUBSET_WALK_CAP};

#[derive(Clone, Debug)]
pub struct Reflection {
    pub base: Arc<FiniteSpace>,
    pub space: IndexedSpace,
    /// The same space as `space.space`, shared with the maps.
    pub target: Arc<FiniteSpace>,
    pub eta: ContinuousMap,
}

impl Reflection {
    fn over(x: &Arc<FiniteSpace>, family: &SetFamily) -> Result<Self> {
        let space = hoare_space(x, family)?;
        let eta = eta(x, &space)?;
        let target = eta.cod().clone();
        Ok(Reflection { base: x.clone(), space, target, eta })
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn point_of(&self, a: PointSet) -> Option<usize> {
        self.space.index_of(a)
    }
}

/// `X^s = P_H(Irr_c(X))`
pub fn sobrify(x: &Arc<FiniteSpace>) -> Result<Reflection> {
    Reflection::over(x, &irreducible_sets(x))
}

/// `X^{ω-w} = P_H(WD_ω(X))`, confirmed ω-well-filtered by the classifier.
pub fn reflect_omega(x: &Arc<FiniteSpace>) -> Result<Reflection> {
    let r = Reflection::over(x, &wd_omega(x))?;
    if filtered_refutation(&r.target, FilterMode::LeastMember)?.is_some() {
        return Err(Error::NotOmegaWf);
    }
    Ok(r)
}

/// `f*(A) = y_A` where `cl f(A) = cl{y_A}`.
pub fn extend_map(f: &ContinuousMap, refl: &Reflection) -> Result<ContinuousMap> {
    if *f.dom() != refl.base {
        return Err(Error::BadMap("map does not start at the reflected space".into()));
    }
    let y = f.cod();
    if filtered_refutation(y, FilterMode::LeastMember)?.is_some() {
        return Err(Error::NotOmegaWf);
    }
    let table = refl
        .space
        .elems
        .iter()
        .map(|&a| {
            let cl = f.image_closure(a);
            generic_point(y, cl).ok_or_else(|| Error::NoGenericPoint(cl.to_vec()))
        })
        .collect::<Result<Vec<_>>>()?;
    let ext = ContinuousMap::new(refl.target.clone(), y.clone(), table)?;
    if refl.eta.then(&ext)?.table() != f.table() {
        return Err(Error::BadMap("extension does not restrict to f".into()));
    }
    Ok(ext)
}

/// Every continuous `g : X^{ω-w} → Y` with `g ∘ η = f`.
pub fn all_extensions(f: &ContinuousMap, refl: &Reflection) -> Result<Vec<ContinuousMap>> {
    caps::ensure("extension domain points", refl.len(), caps::UNIQUENESS_CAP)?;
    caps::ensure("extension codomain points", f.cod().len(), caps::UNIQUENESS_CAP)?;
    let maps = ContinuousMap::enumerate(&refl.target, f.cod())?;
    Ok(maps
        .into_iter()
        .filter(|g| refl.eta.table().iter().map(|&p| g.apply(p)).eq(f.table().iter().copied()))
        .collect())
}

/// `A ↦ cl f(A)` between reflections.
pub fn functor_map(f: &ContinuousMap, rx: &Reflection, ry: &Reflection) -> Result<ContinuousMap> {
    if *f.dom() != rx.base || *f.cod() != ry.base {
        return Err(Error::BadMap("reflections do not match the map".into()));
    }
    let table = rx
        .space
        .elems
        .iter()
        .map(|&a| {
            let cl = f.image_closure(a);
            ry.point_of(cl).ok_or_else(|| Error::NoGenericPoint(cl.to_vec()))
        })
        .collect::<Result<Vec<_>>>()?;
    let fw = ContinuousMap::new(rx.target.clone(), ry.target.clone(), table)?;
    let left = rx.eta.then(&fw)?;
    let right = f.then(&ry.eta)?;
    if left.table() != right.table() {
        return Err(Error::BadMap("naturality square does not commute".into()));
    }
    Ok(fw)
}

/// `Y` is ω-well-filtered when it is a retract of an ω-well-filtered `X`.
pub fn retract_check(r: &ContinuousMap, s: &ContinuousMap) -> Result<bool> {
    let (x, y) = (r.dom(), r.cod());
    if *s.dom() != *y || *s.cod() != *x {
        return Err(Error::NotRetraction);
    }
    let rs = s.then(r)?;
    if rs.table().iter().enumerate().any(|(i, &j)| i != j) {
        return Err(Error::NotRetraction);
    }
    if filtered_refutation(x, FilterMode::LeastMember)?.is_some() {
        return Err(Error::PremiseViolated("retracted space is not ω-well-filtered".into()));
    }
    Ok(filtered_refutation(y, FilterMode::Exhaustive)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReflectionReport {
    /// `γ : A ↦ (p_1(A), …, p_n(A))` is a homeomorphism `(∏X_i)^{ω-w} → ∏X_i^{ω-w}`.
    pub gamma_homeomorphism: bool,
    /// `∏X_i` is ω-well-filtered iff every factor is.
    pub omega_wf_agrees: bool,
}

impl ProductReflectionReport {
    pub fn all_pass(&self) -> bool {
        self.gamma_homeomorphism && self.omega_wf_agrees
    }
}

pub fn product_reflection_check(xs: &[Arc<FiniteSpace>]) -> Result<ProductReflectionReport> {
    let p = ProductSpace::new(xs.to_vec())?;
    let whole = reflect_omega(&p.space)?;
    let parts = xs.iter().map(reflect_omega).collect::<Result<Vec<_>>>()?;
    let q = ProductSpace::new(parts.iter().map(|r| r.target.clone()).collect())?;
    let table: Option<Vec<usize>> = whole
        .space
        .elems
        .iter()
        .map(|&a| {
            let coords = (0..p.arity()).map(|i| parts[i].point_of(p.project(i, a))).collect::<Option<Vec<_>>>()?;
            Some(q.point(&coords))
        })
        .collect();
    let gamma_homeomorphism = table
        .and_then(|t| ContinuousMap::new(whole.target.clone(), q.space.clone(), t).ok())
        .is_some_and(|g| g.is_homeomorphism());
    let wf = |x: &FiniteSpace| filtered_refutation(x, FilterMode::LeastMember).map(|c| c.is_none());
    let factors_wf = xs.iter().map(|x| wf(x)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
    Ok(ProductReflectionReport { gamma_homeomorphism, omega_wf_agrees: wf(&p.space)? == factors_wf })
}

/// Both sides of each preservation statement, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreservationReport {
    /// `X^{ω-w}` is the sobrification; `X^{ω-w}` sober; `Irr_c = WD_ω`.
    pub reflection_is_sobrification: [bool; 3],
    pub compact: [bool; 2],
    pub locally_hypercompact: [bool; 2],
    pub c_space: [bool; 2],
    /// `X` core compact; `X^{ω-w}` core compact; `X^{ω-w}` locally compact.
    pub core_compact: [bool; 3],
    /// `U ↦ ◇U` is a bijection `O(X) → O(X^{ω-w})` preserving `∪` and `∩`.
    pub open_lattice_iso: bool,
}

fn same<const N: usize>(v: &[bool; N]) -> bool {
    v.iter().all(|&b| b == v[0])
}

impl PreservationReport {
    pub fn all_agree(&self) -> bool {
        same(&self.reflection_is_sobrification)
            && same(&self.compact)
            && same(&self.locally_hypercompact)
            && same(&self.c_space)
            && same(&self.core_compact)
            && self.open_lattice_iso
    }
}

pub fn preservation_checks(x: &Arc<FiniteSpace>) -> Result<PreservationReport> {
    let w = reflect_omega(x)?;
    let s = sobrify(x)?;
    let (rx, rw) = (classify(x)?, classify(&w.target)?);
    let irr = irreducible_sets(x);
    let wd = wd_omega(x);
    let is_sobrification = w.space.elems == s.space.elems && w.target == s.target;
    let diamond: Vec<PointSet> = x.opens().iter().map(|&u| w.space.diamond(u)).collect();
    let bijective = {
        let mut d = diamond.clone();
        crate::pointset::canonicalize(&mut d);
        d.len() == x.opens().len() && d.iter().all(|&o| w.target.is_open(o)) && d.len() == w.target.opens().len()
    };
    let ops = x.opens().iter().enumerate().all(|(i, &u)| {
        x.opens().iter().enumerate().all(|(j, &v)| {
            let (du, dv) = (diamond[i], diamond[j]);
            w.space.diamond(u.union(v)) == du.union(dv) && w.space.diamond(u.intersection(v)) == du.intersection(dv)
        })
    });
    Ok(PreservationReport {
        reflection_is_sobrification: [is_sobrification, rw.holds(SOBER), irr == wd],
        compact: [rx.holds(COMPACT), rw.holds(COMPACT)],
        locally_hypercompact: [rx.holds(LOCALLY_HYPERCOMPACT), rw.holds(LOCALLY_HYPERCOMPACT)],
        c_space: [rx.holds(C_SPACE), rw.holds(C_SPACE)],
        core_compact: [rx.holds(CORE_COMPACT), rw.holds(CORE_COMPACT), rw.holds(LOCALLY_COMPACT)],
        open_lattice_iso: bijective && ops,
    })
}

/// Structural facts about `η` and `□`, checked over every subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionLemmas {
    /// `cl η(A) = □cl(A)` for every subset `A`.
    pub closure_of_image: bool,
    /// `A` irreducible iff `□cl(A)` irreducible.
    pub irreducibility: bool,
    /// `C ∈ WD_ω(X)` iff `□C ∈ WD_ω(X^{ω-w})` for closed `C`.
    pub wd_transfer: bool,
    /// `(X^{ω-w})^{ω-w} ≅ X^{ω-w}`.
    pub idempotent: bool,
    /// Closed sets of `X^{ω-w}` are exactly `□C`.
    pub closed_sets_are_boxes: bool,
    pub eta_embedding: bool,
}

impl ReflectionLemmas {
    pub fn all_pass(&self) -> bool {
        self.closure_of_image
            && self.irreducibility
            && self.wd_transfer
            && self.idempotent
            && self.closed_sets_are_boxes
            && self.eta_embedding
    }
}

pub fn reflection_lemmas(x: &Arc<FiniteSpace>) -> Result<ReflectionLemmas> {
    caps::ensure("reflection lemma subset walk", x.len(), SUBSET_WALK_CAP)?;
    let w = reflect_omega(x)?;
    let ww = reflect_omega(&w.target)?;
    let mut closure_of_image = true;
    let mut irreducibility = true;
    for a in x.full().subsets().skip(1) {
        let boxed = w.space.boxed(x.closure(a));
        closure_of_image &= w.target.closure(w.eta.image(a)) == boxed;
        irreducibility &= is_irreducible(x, a)? == is_irreducible(&w.target, boxed)?;
    }
    let wd_w = wd_omega(&w.target);
    let wd = wd_omega(x);
    let wd_transfer = x
        .closed_sets()
        .into_iter()
        .filter(|c| !c.is_empty())
        .all(|c| wd.contains(c) == wd_w.contains(w.space.boxed(c)));
    let mut boxes: Vec<PointSet> = x.closed_sets().into_iter().map(|c| w.space.boxed(c)).collect();
    crate::pointset::canonicalize(&mut boxes);
    Ok(ReflectionLemmas {
        closure_of_image,
        irreducibility,
        wd_transfer,
        idempotent: ww.target.is_homeomorphic(&w.target),
        closed_sets_are_boxes: boxes == w.target.closed_sets(),
        eta_embedding: w.eta.is_embedding(),
    })
}

/// ω-WF, `RD_ω = S_c`, `WD_ω = S_c`, `X ≅ X^{ω-w}`.
pub fn omega_wf_characterizations(x: &Arc<FiniteSpace>) -> Result<[bool; 4]> {
    let sc = point_closure_family(x);
    let w = reflect_omega(x)?;
    Ok([
        filtered_refutation(x, FilterMode::LeastMember)?.is_none(),
        rd_omega(x) == sc,
        wd_omega(x) == sc,
        w.eta.is_homeomorphism(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reflections_are_homeomorphic() {
        for x in [FiniteSpace::point(), FiniteSpace::sierpinski(), FiniteSpace::v_space()] {
            let x = Arc::new(x);
            assert!(sobrify(&x).unwrap().eta.is_homeomorphism());
            assert!(reflect_omega(&x).unwrap().eta.is_homeomorphism());
            assert!(reflection_lemmas(&x).unwrap().all_pass());
            assert!(preservation_checks(&x).unwrap().all_agree());
            assert_eq!(omega_wf_characterizations(&x).unwrap(), [true; 4]);
        }
    }

    #[test]
    fn extension_of_v_collapse() {
        let v = Arc::new(FiniteSpace::v_space());
        let s = Arc::new(FiniteSpace::sierpinski());
        let f = ContinuousMap::new(v.clone(), s, vec![0, 1, 1]).unwrap();
        let r = reflect_omega(&v).unwrap();
        let ext = extend_map(&f, &r).unwrap();
        let b = r.point_of(v.point_closure(1)).unwrap();
        assert_eq!(ext.apply(b), 1);
        let all = all_extensions(&f, &r).unwrap();
        assert_eq!(all, vec![ext]);
    }

    #[test]
    fn eta_extends_to_identity() {
        let v = Arc::new(FiniteSpace::v_space());
        let r = reflect_omega(&v).unwrap();
        let ext = extend_map(&r.eta, &r).unwrap();
        assert!(ext.table().iter().enumerate().all(|(i, &j)| i == j));
    }

    #[test]
    fn functor_and_retract() {
        let v = Arc::new(FiniteSpace::v_space());
        let s = Arc::new(FiniteSpace::sierpinski());
        let (rv, rs) = (reflect_omega(&v).unwrap(), reflect_omega(&s).unwrap());
        let id = ContinuousMap::identity(v.clone());
        let fid = functor_map(&id, &rv, &rv).unwrap();
        assert!(fid.table().iter().enumerate().all(|(i, &j)| i == j));
        // s embeds {a,b}, r collapses c onto b
        let sec = ContinuousMap::new(s.clone(), v.clone(), vec![0, 1]).unwrap();
        let ret = ContinuousMap::new(v.clone(), s.clone(), vec![0, 1, 1]).unwrap();
        assert!(retract_check(&ret, &sec).unwrap());
        assert!(functor_map(&ret, &rv, &rs).is_ok());
        assert_eq!(retract_check(&sec, &sec), Err(Error::NotRetraction));
    }

    #[test]
    fn product_reflection() {
        let s = Arc::new(FiniteSpace::sierpinski());
        let v = Arc::new(FiniteSpace::v_space());
        assert!(product_reflection_check(&[s.clone(), s.clone()]).unwrap().all_pass());
        assert!(product_reflection_check(&[v.clone(), s]).unwrap().all_pass());
        assert!(product_reflection_check(&[v]).unwrap().all_pass());
    }
}
