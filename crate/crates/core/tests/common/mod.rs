//! Brute-force oracles working from the open family alone.
#![allow(dead_code)]

use std::collections::BTreeSet;

use wfspace::catalog::fan::{FanOpen, FanPoint};
use wfspace::{FiniteSpace, PointSet};

pub fn bits(v: &[usize]) -> u64 {
    v.iter().fold(0, |b, &i| b | 1 << i)
}

pub struct Oracle {
    pub n: usize,
    pub full: u64,
    pub opens: Vec<u64>,
}

impl Oracle {
    pub fn of(x: &FiniteSpace) -> Self {
        let n = x.len();
        Oracle { n, full: (1u64 << n) - 1, opens: x.opens().iter().map(|u| u.bits()).collect() }
    }

    pub fn is_open(&self, a: u64) -> bool {
        self.opens.contains(&a)
    }

    pub fn is_closed(&self, a: u64) -> bool {
        self.is_open(self.full & !a)
    }

    pub fn closed_sets(&self) -> Vec<u64> {
        self.opens.iter().map(|u| self.full & !u).collect()
    }

    pub fn closure(&self, a: u64) -> u64 {
        let outside = self.opens.iter().filter(|&&u| u & a == 0).fold(0, |s, u| s | u);
        self.full & !outside
    }

    /// Intersection of the opens containing `a`.
    pub fn saturation(&self, a: u64) -> u64 {
        self.opens.iter().filter(|&&u| u & a == a).fold(self.full, |s, u| s & u)
    }

    pub fn subsets(&self) -> impl Iterator<Item = u64> {
        0..=self.full
    }

    /// Nonempty and not inside either of two closed sets whose union covers it.
    pub fn is_irreducible(&self, a: u64) -> bool {
        if a == 0 {
            return false;
        }
        let closed = self.closed_sets();
        closed.iter().all(|&f1| closed.iter().all(|&f2| a & !(f1 | f2) != 0 || a & !f1 == 0 || a & !f2 == 0))
    }

    pub fn irreducible_closed(&self) -> BTreeSet<u64> {
        self.closed_sets().into_iter().filter(|&c| self.is_irreducible(c)).collect()
    }

    pub fn point_closures(&self) -> BTreeSet<u64> {
        (0..self.n).map(|p| self.closure(1 << p)).collect()
    }

    pub fn is_sober(&self) -> bool {
        self.irreducible_closed().iter().all(|&c| (0..self.n).filter(|&p| self.closure(1 << p) == c).count() == 1)
    }

    /// Nonempty saturated sets; every subset of a finite space is compact.
    pub fn compact_saturated(&self) -> Vec<u64> {
        self.subsets().filter(|&a| a != 0 && self.saturation(a) == a).collect()
    }

    /// Every nonempty filtered subfamily of `K(X)` against every open.
    pub fn omega_well_filtered(&self) -> bool {
        let ks = self.compact_saturated();
        assert!(ks.len() <= 16, "oracle family walk too large");
        (1u32..1 << ks.len()).all(|fam| {
            let members: Vec<u64> = (0..ks.len()).filter(|i| fam >> i & 1 == 1).map(|i| ks[i]).collect();
            let filtered = members.iter().all(|&a| members.iter().all(|&b| members.iter().any(|&c| c & !(a & b) == 0)));
            if !filtered {
                return true;
            }
            let meet = members.iter().fold(self.full, |s, k| s & k);
            self.opens.iter().filter(|&&u| meet & !u == 0).all(|&u| members.iter().any(|k| k & !u == 0))
        })
    }

    /// Minimal closed subsets of `c` meeting every member of `family`.
    pub fn rudin_minimal(&self, family: &[u64], c: u64) -> Vec<u64> {
        let meets_all = |a: u64| family.iter().all(|k| k & a != 0);
        let cands: Vec<u64> = self.closed_sets().into_iter().filter(|&a| a & !c == 0 && meets_all(a)).collect();
        let mut out: Vec<u64> =
            cands.iter().copied().filter(|&a| !cands.iter().any(|&b| b != a && b & !a == 0)).collect();
        out.sort_unstable();
        out
    }

    /// `U ≪ V` over every directed subfamily of `O(X)`.
    pub fn way_below(&self, u: u64, v: u64) -> bool {
        let m = self.opens.len();
        assert!(m <= 16, "oracle open-family walk too large");
        (1u32..1 << m).all(|fam| {
            let members: Vec<u64> = (0..m).filter(|i| fam >> i & 1 == 1).map(|i| self.opens[i]).collect();
            let directed = members.iter().all(|&a| members.iter().all(|&b| members.iter().any(|&c| (a | b) & !c == 0)));
            let union = members.iter().fold(0, |s, a| s | a);
            !directed || v & !union != 0 || members.iter().any(|&w| u & !w == 0)
        })
    }

    pub fn is_continuous_table(&self, y: &Oracle, table: &[usize]) -> bool {
        y.opens.iter().all(|&v| {
            let pre = (0..self.n).filter(|&p| v >> table[p] & 1 == 1).fold(0, |s, p| s | 1 << p);
            self.is_open(pre)
        })
    }

    /// Every continuous map as a table, in lexicographic order.
    pub fn continuous_maps(&self, y: &Oracle) -> Vec<Vec<usize>> {
        let total = y.n.pow(self.n as u32);
        (0..total)
            .map(|mut code| {
                (0..self.n)
                    .map(|_| {
                        let d = code % y.n;
                        code /= y.n;
                        d
                    })
                    .collect::<Vec<_>>()
            })
            .filter(|t| self.is_continuous_table(y, t))
            .collect()
    }
}

pub fn to_set(a: u64) -> PointSet {
    PointSet::from_bits(a)
}

/// `{⊥, ⊤} ∪ ([0..5] × [0..5])` with column `6` standing for every column
/// the open does not mention. A column's supremum inside the sub-lattice is
/// redirected to `⊤`, so a Scott-open set containing `⊤` must contain each
/// column's top `(n, 5)`.
pub fn fan_sublattice_open(u: &FanOpen) -> bool {
    let pts: Vec<FanPoint> = std::iter::once(FanPoint::Bottom)
        .chain((0..=6).flat_map(|n| (0..=5).map(move |m| FanPoint::Pair(n, m))))
        .chain(std::iter::once(FanPoint::Top))
        .collect();
    let mem = |p: FanPoint| match p {
        FanPoint::Pair(6, m) => u.default.is_some_and(|t| m >= t),
        p => u.contains(p),
    };
    let leq = |a: FanPoint, b: FanPoint| match (a, b) {
        (FanPoint::Bottom, _) | (_, FanPoint::Top) => true,
        (FanPoint::Pair(n1, m1), FanPoint::Pair(n2, m2)) => n1 == n2 && m1 <= m2,
        _ => false,
    };
    let upset = pts.iter().all(|&a| !mem(a) || pts.iter().all(|&b| !leq(a, b) || mem(b)));
    let tops = !mem(FanPoint::Top) || (0..=6).all(|n| mem(FanPoint::Pair(n, 5)));
    upset && tops
}
