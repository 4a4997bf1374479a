//! Continuous maps between finite spaces.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// Cap on `|cod|^|dom|` for exhaustive map enumeration.
pub const MAP_ENUMERATION_CAP: usize = 1 << 20;

/// A point table between two spaces whose continuity was checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousMap {
    dom: Arc<FiniteSpace>,
    cod: Arc<FiniteSpace>,
    table: Vec<usize>,
}

impl ContinuousMap {
    pub fn new(dom: Arc<FiniteSpace>, cod: Arc<FiniteSpace>, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.len() {
            return Err(Error::BadMap(format!("table has {} entries for {} points", table.len(), dom.len())));
        }
        if let Some(&index) = table.iter().find(|&&y| y >= cod.len()) {
            return Err(Error::PointOutOfRange { index, n: cod.len() });
        }
        let map = ContinuousMap { dom, cod, table };
        if let Some(&u) = map.cod.opens().iter().find(|&&u| !map.dom.is_open(map.preimage(u))) {
            return Err(Error::NotContinuous(u.to_vec()));
        }
        Ok(map)
    }

    pub fn identity(x: Arc<FiniteSpace>) -> Self {
        let table = (0..x.len()).collect();
        ContinuousMap { dom: x.clone(), cod: x, table }
    }

    pub fn constant(dom: Arc<FiniteSpace>, cod: Arc<FiniteSpace>, y: usize) -> Result<Self> {
        let table = vec![y; dom.len()];
        Self::new(dom, cod, table)
    }

    pub fn dom(&self) -> &Arc<FiniteSpace> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteSpace> {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        a.iter().map(|x| self.table[x]).collect()
    }

    pub fn preimage(&self, b: PointSet) -> PointSet {
        (0..self.table.len()).filter(|&x| b.contains(self.table[x])).collect()
    }

    /// `cl f(A)`
    pub fn image_closure(&self, a: PointSet) -> PointSet {
        self.cod.closure(self.image(a))
    }

    /// `other ∘ self`
    pub fn then(&self, other: &ContinuousMap) -> Result<ContinuousMap> {
        if *self.cod != *other.dom {
            return Err(Error::BadMap("composition of non-matching maps".into()));
        }
        let table = self.table.iter().map(|&y| other.table[y]).collect();
        Ok(ContinuousMap { dom: self.dom.clone(), cod: other.cod.clone(), table })
    }

    pub fn is_injective(&self) -> bool {
        let img = self.image(self.dom.full());
        img.len() == self.dom.len()
    }

    /// Injective, continuous, and open onto its image as a subspace.
    pub fn is_embedding(&self) -> bool {
        if !self.is_injective() {
            return false;
        }
        let img = self.image(self.dom.full());
        // Subspace opens of the image are traces V ∩ img of codomain opens.
        self.dom.opens().iter().all(|&u| {
            let fu = self.image(u);
            self.cod.opens().iter().any(|&v| v.intersection(img) == fu)
        })
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_embedding()
    }

    /// Every continuous map `dom → cod`, in lexicographic table order.
    pub fn enumerate(dom: &Arc<FiniteSpace>, cod: &Arc<FiniteSpace>) -> Result<Vec<ContinuousMap>> {
        let (n, m) = (dom.len(), cod.len());
        let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if total > MAP_ENUMERATION_CAP as u128 {
            return Err(Error::CapExceeded {
                what: "map enumeration",
                size: total.min(usize::MAX as u128) as usize,
                cap: MAP_ENUMERATION_CAP,
            });
        }
        let mut out = Vec::new();
        if m == 0 {
            return Ok(out);
        }
        let mut table = vec![0usize; n];
        loop {
            if let Ok(f) = ContinuousMap::new(dom.clone(), cod.clone(), table.clone()) {
                out.push(f);
            }
            // odometer
            let mut k = n;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                table[k] += 1;
                if table[k] < m {
                    break;
                }
                table[k] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapse_v_onto_sierpinski() {
        let v = Arc::new(FiniteSpace::v_space());
        let s = Arc::new(FiniteSpace::sierpinski());
        let f = ContinuousMap::new(v.clone(), s.clone(), vec![0, 1, 1]).unwrap();
        assert_eq!(f.image_closure(PointSet::from_indices([0, 1])), PointSet::full(2));
        let bad = ContinuousMap::new(v, s, vec![1, 0, 0]);
        assert!(matches!(bad, Err(Error::NotContinuous(_))));
    }

    #[test]
    fn enumerate_counts_monotone_maps() {
        // continuous maps between finite spaces = monotone maps of specialization orders
        let s = Arc::new(FiniteSpace::sierpinski());
        assert_eq!(ContinuousMap::enumerate(&s, &s).unwrap().len(), 3);
        let d = Arc::new(FiniteSpace::discrete(2));
        assert_eq!(ContinuousMap::enumerate(&d, &s).unwrap().len(), 4);
        assert_eq!(ContinuousMap::enumerate(&s, &d).unwrap().len(), 2);
    }

    #[test]
    fn embedding_checks() {
        let v = Arc::new(FiniteSpace::v_space());
        let s = Arc::new(FiniteSpace::sierpinski());
        let incl = ContinuousMap::new(s.clone(), v.clone(), vec![0, 1]).unwrap();
        assert!(incl.is_embedding());
        assert!(!incl.is_homeomorphism());
        let d = Arc::new(FiniteSpace::discrete(2));
        // identity-on-points discrete -> Sierpinski is a continuous bijection but not an embedding
        let f = ContinuousMap::new(d, s, vec![0, 1]).unwrap();
        assert!(f.is_injective() && !f.is_embedding());
    }
}
