//! Finite products of finite spaces.

use std::sync::Arc;

use crate::caps;
use crate::error::{Error, Result};
use crate::map::ContinuousMap;
use crate::pointset::PointSet;
use crate::space::FiniteSpace;
use crate::topology::{irreducible_sets, is_irreducible};

/// `∏ X_i` with points encoded in mixed radix (first factor varies slowest).
#[derive(Clone, Debug)]
pub struct ProductSpace {
    pub space: Arc<FiniteSpace>,
    pub factors: Vec<Arc<FiniteSpace>>,
    pub projections: Vec<ContinuousMap>,
    strides: Vec<usize>,
}

impl ProductSpace {
    pub fn new(factors: Vec<Arc<FiniteSpace>>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptySet);
        }
        let size = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.len())).unwrap_or(usize::MAX);
        caps::ensure("product size", size, caps::core_cap())?;
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].len();
        }
        let coord = |p: usize, i: usize| (p / strides[i]) % factors[i].len();
        // box subbasis: open cylinders p_i^{-1}(U)
        let mut subbasis = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            for &u in f.opens() {
                subbasis.push((0..size).filter(|&p| u.contains(coord(p, i))).collect::<PointSet>());
            }
        }
        let mut space = FiniteSpace::generate(size, &subbasis)?;
        if factors.iter().all(|f| f.names().is_some()) {
            let names = (0..size)
                .map(|p| {
                    let parts: Vec<String> = (0..factors.len()).map(|i| factors[i].name(coord(p, i))).collect();
                    format!("({})", parts.join(","))
                })
                .collect();
            space = space.with_names(names)?;
        }
        let space = Arc::new(space);
        let projections = factors
            .iter()
            .enumerate()
            .map(|(i, f)| ContinuousMap::new(space.clone(), f.clone(), (0..size).map(|p| coord(p, i)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductSpace { space, factors, projections, strides })
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn coords(&self, p: usize) -> Vec<usize> {
        (0..self.arity()).map(|i| (p / self.strides[i]) % self.factors[i].len()).collect()
    }

    pub fn point(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn project(&self, i: usize, a: PointSet) -> PointSet {
        self.projections[i].image(a)
    }

    /// `∏ A_i`
    pub fn boxed(&self, parts: &[PointSet]) -> PointSet {
        (0..self.space.len()).filter(|&p| self.coords(p).iter().zip(parts).all(|(&c, a)| a.contains(c))).collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductCheckReport {
    /// For irreducible `A`: `cl A = ∏ cl p_i(A)`.
    pub closure_factorizes: Option<bool>,
    /// For a box `A = ∏ A_i` with nonempty sides: irreducible iff every side is.
    pub box_irreducibility: Option<bool>,
    /// For `A ∈ Irr_c`: `A = ∏ p_i(A)` with every `p_i(A) ∈ Irr_c(X_i)`.
    pub closed_irreducible_factorizes: Option<bool>,
}

impl ProductCheckReport {
    pub fn all_pass(&self) -> bool {
        [self.closure_factorizes, self.box_irreducibility, self.closed_irreducible_factorizes]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

/// Runs each product lemma whose hypotheses `a` satisfies.
pub fn product_checks(p: &ProductSpace, a: PointSet) -> Result<ProductCheckReport> {
    let x = &p.space;
    let mut report = ProductCheckReport::default();
    if a.is_empty() {
        return Ok(report);
    }
    let parts: Vec<PointSet> = (0..p.arity()).map(|i| p.project(i, a)).collect();
    let irreducible = is_irreducible(x, a)?;
    if irreducible {
        let closures: Vec<PointSet> = parts.iter().enumerate().map(|(i, &pi)| p.factors[i].closure(pi)).collect();
        report.closure_factorizes = Some(x.closure(a) == p.boxed(&closures));
    }
    if p.boxed(&parts) == a {
        let sides_irreducible = parts
            .iter()
            .enumerate()
            .map(|(i, &pi)| is_irreducible(&p.factors[i], pi))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        report.box_irreducibility = Some(irreducible == sides_irreducible);
    }
    if irreducible && x.is_closed(a) {
        let factor_ok = parts
            .iter()
            .enumerate()
            .all(|(i, &pi)| p.factors[i].is_closed(pi) && is_irreducible(&p.factors[i], pi).unwrap_or(false));
        report.closed_irreducible_factorizes = Some(a == p.boxed(&parts) && factor_ok);
    }
    Ok(report)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductSweep {
    pub subsets_checked: usize,
    pub closure_checks: usize,
    pub box_checks: usize,
    pub irreducible_closed: usize,
    pub failures: Vec<PointSet>,
}

impl ProductSweep {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`product_checks`] on every nonempty subset of the product, plus
/// every box built from nonempty factor subsets.
pub fn product_sweep(p: &ProductSpace) -> Result<ProductSweep> {
    caps::ensure("product sweep points", p.space.len(), crate::topology::SUBSET_WALK_CAP)?;
    let mut sweep = ProductSweep::default();
    let record = |a: PointSet, r: ProductCheckReport, sweep: &mut ProductSweep| {
        sweep.subsets_checked += 1;
        sweep.closure_checks += r.closure_factorizes.is_some() as usize;
        sweep.box_checks += r.box_irreducibility.is_some() as usize;
        sweep.irreducible_closed += r.closed_irreducible_factorizes.is_some() as usize;
        if !r.all_pass() {
            sweep.failures.push(a);
        }
    };
    for a in p.space.full().subsets().skip(1) {
        let r = product_checks(p, a)?;
        record(a, r, &mut sweep);
    }
    debug_assert_eq!(sweep.irreducible_closed, irreducible_sets(&p.space).len());
    Ok(sweep)
}
