//! Finite partial orders.

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// Hard ceiling on the number of up-sets enumerated for one poset.
pub const UPSET_LIMIT: usize = 1 << 22;

/// A partial order on `{0, .., n-1}`, stored as principal filters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    /// `up[i] = { j : i <= j }`
    up: Vec<PointSet>,
    /// `down[i] = { j : j <= i }`
    down: Vec<PointSet>,
}

impl FinitePoset {
    /// Builds a poset from its principal filters, validating the order axioms.
    pub fn from_upsets(up: Vec<PointSet>) -> Result<Self> {
        let n = up.len();
        if n > MAX_POINTS {
            return Err(Error::CapExceeded { what: "poset size", size: n, cap: MAX_POINTS });
        }
        let full = PointSet::full(n);
        for (i, &u) in up.iter().enumerate() {
            if !u.is_subset(full) {
                let index = u.difference(full).first().unwrap_or(n);
                return Err(Error::PointOutOfRange { index, n });
            }
            if !u.contains(i) {
                return Err(Error::NotAPartialOrder(format!("{i} is not <= itself")));
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAPartialOrder(format!("{i} <= {j} <= {i}")));
                }
                if !up[j].is_subset(up[i]) {
                    return Err(Error::NotAPartialOrder(format!("transitivity fails at {i} <= {j}")));
                }
            }
        }
        let mut down = vec![PointSet::EMPTY; n];
        for (i, &u) in up.iter().enumerate() {
            for j in u.iter() {
                down[j] = down[j].with(i);
            }
        }
        Ok(FinitePoset { n, up, down })
    }

    /// Builds a poset from an n x n relation matrix (`leq[i][j]` means `i <= j`).
    pub fn from_matrix(leq: &[Vec<bool>]) -> Result<Self> {
        let n = leq.len();
        let up = leq
            .iter()
            .map(|row| {
                if row.len() != n {
                    return Err(Error::NotAPartialOrder("relation matrix is not square".into()));
                }
                Ok(row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j).collect())
            })
            .collect::<Result<Vec<PointSet>>>()?;
        Self::from_upsets(up)
    }

    /// Reflexive-transitive closure of the given `(below, above)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::CapExceeded { what: "poset size", size: n, cap: MAX_POINTS });
        }
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(a, b) in pairs {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::PointOutOfRange { index, n });
                }
            }
            up[a] = up[a].with(b);
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        Self::from_upsets(up)
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs).expect("chain is a partial order")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_pairs(n, &[]).expect("antichain is a partial order")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `↑x`
    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    /// `↓x`
    pub fn down(&self, x: usize) -> PointSet {
        self.down[x]
    }

    pub fn upsets_of_points(&self) -> &[PointSet] {
        &self.up
    }

    pub fn up_closure(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |s, x| s.union(self.up[x]))
    }

    pub fn down_closure(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |s, x| s.union(self.down[x]))
    }

    pub fn is_upset(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.up[x].is_subset(a))
    }

    pub fn is_downset(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.down[x].is_subset(a))
    }

    /// Elements above every member of `a` (all of P when `a` is empty).
    pub fn upper_bounds(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::full(self.n), |s, x| s.intersection(self.up[x]))
    }

    /// Least element of `a` under the order, if one exists.
    pub fn least_of(&self, a: PointSet) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.up[x]))
    }

    /// Greatest element of `a` under the order, if one exists.
    pub fn greatest_of(&self, a: PointSet) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.down[x]))
    }

    /// Least upper bound of `a`, if it exists.
    pub fn sup(&self, a: PointSet) -> Option<usize> {
        self.least_of(self.upper_bounds(a))
    }

    pub fn minimal_elements(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.down[x].intersection(a) == PointSet::singleton(x)).collect()
    }

    pub fn maximal_elements(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.up[x].intersection(a) == PointSet::singleton(x)).collect()
    }

    /// Nonempty and every pair has an upper bound inside the set.
    pub fn is_directed(&self, a: PointSet) -> bool {
        if a.is_empty() {
            return false;
        }
        let pts = a.to_vec();
        pts.iter().enumerate().all(|(k, &x)| pts[k..].iter().all(|&y| self.up[x].intersection(self.up[y]).meets(a)))
    }

    /// Nonempty and every pair has a lower bound inside the set.
    pub fn is_filtered(&self, a: PointSet) -> bool {
        if a.is_empty() {
            return false;
        }
        let pts = a.to_vec();
        pts.iter().enumerate().all(|(k, &x)| pts[k..].iter().all(|&y| self.down[x].intersection(self.down[y]).meets(a)))
    }

    pub fn is_chain(&self, a: PointSet) -> bool {
        let pts = a.to_vec();
        pts.iter().enumerate().all(|(k, &x)| pts[k + 1..].iter().all(|&y| self.leq(x, y) || self.leq(y, x)))
    }

    /// A linear extension listing larger elements first.
    pub fn top_down_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        // |↑x| strictly decreases along strict order, so sorting by it is a linear extension.
        order.sort_by_key(|&x| (self.up[x].len(), x));
        order
    }

    /// All up-sets, in canonical `(popcount, value)` order.
    pub fn upsets(&self) -> Result<Vec<PointSet>> {
        let order = self.top_down_order();
        let mut out = Vec::new();
        enumerate_upsets(self, &order, 0, PointSet::EMPTY, &mut out)?;
        crate::pointset::canonicalize(&mut out);
        Ok(out)
    }

    /// The reverse order.
    pub fn dual(&self) -> Self {
        FinitePoset { n: self.n, up: self.down.clone(), down: self.up.clone() }
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let strict = self.up[a].without(a);
            for b in self.minimal_elements(strict).iter() {
                out.push((a, b));
            }
        }
        out
    }
}

fn enumerate_upsets(p: &FinitePoset, order: &[usize], k: usize, cur: PointSet, out: &mut Vec<PointSet>) -> Result<()> {
    if k == order.len() {
        if out.len() >= UPSET_LIMIT {
            return Err(Error::CapExceeded { what: "open-set count", size: out.len() + 1, cap: UPSET_LIMIT });
        }
        out.push(cur);
        return Ok(());
    }
    let x = order[k];
    enumerate_upsets(p, order, k + 1, cur, out)?;
    if p.up(x).without(x).is_subset(cur) {
        enumerate_upsets(p, order, k + 1, cur.with(x), out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycles_and_missing_reflexivity() {
        let up = vec![PointSet::from_indices([0, 1]), PointSet::from_indices([0, 1])];
        assert!(matches!(FinitePoset::from_upsets(up), Err(Error::NotAPartialOrder(_))));
        let up = vec![PointSet::from_indices([1]), PointSet::from_indices([1])];
        assert!(matches!(FinitePoset::from_upsets(up), Err(Error::NotAPartialOrder(_))));
        assert!(matches!(FinitePoset::from_pairs(2, &[(0, 1), (1, 0)]), Err(Error::NotAPartialOrder(_))));
    }

    #[test]
    fn upsets_match_brute_force() {
        let p = FinitePoset::from_pairs(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let mut brute: Vec<PointSet> =
            PointSet::full(4).subsets().filter(|&s| s.iter().all(|x| p.up(x).is_subset(s))).collect();
        crate::pointset::canonicalize(&mut brute);
        assert_eq!(p.upsets().unwrap(), brute);
    }

    #[test]
    fn chain_sup_and_directedness() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.sup(PointSet::from_indices([0, 1])), Some(1));
        assert!(c.is_directed(PointSet::from_indices([0, 2])));
        assert!(c.is_chain(PointSet::full(3)));
        let a = FinitePoset::antichain(2);
        assert!(!a.is_directed(PointSet::full(2)));
        assert_eq!(a.sup(PointSet::full(2)), None);
        assert_eq!(a.upsets().unwrap().len(), 4);
    }

    #[test]
    fn covers_of_diamond() {
        let p = FinitePoset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }
}
