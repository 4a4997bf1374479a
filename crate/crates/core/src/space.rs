//! Finite T0 spaces.
//!
//! A [`FiniteSpace`] stores its full open family in canonical order
//! (cardinality, then numeric value), so two spaces on the same labeled point
//! set are equal exactly when their topologies coincide. Minimal open
//! neighborhoods and point closures are cached at construction.

use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::pointset::{canonicalize, PointSet, MAX_POINTS};
use crate::poset::FinitePoset;

#[derive(Clone, Debug)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<PointSet>,
    names: Option<Vec<String>>,
    /// minimal open neighborhood of each point (`↑x` in the specialization order)
    nbhd: Vec<PointSet>,
    /// closure of each point (`↓x`)
    pclosure: Vec<PointSet>,
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.opens == other.opens
    }
}

impl Eq for FiniteSpace {}

impl Hash for FiniteSpace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.opens.hash(state);
    }
}

fn check_range(n: usize, s: PointSet) -> Result<()> {
    let full = PointSet::full(n);
    match s.difference(full).first() {
        Some(index) => Err(Error::PointOutOfRange { index, n }),
        None => Ok(()),
    }
}

impl FiniteSpace {
    /// Smallest topology on `n` points containing every subbasis member.
    pub fn generate(n: usize, subbasis: &[PointSet]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::CapExceeded { what: "point count", size: n, cap: MAX_POINTS });
        }
        for &s in subbasis {
            check_range(n, s)?;
        }
        let full = PointSet::full(n);
        let nbhd: Vec<PointSet> = (0..n)
            .map(|x| subbasis.iter().filter(|s| s.contains(x)).fold(full, |acc, &s| acc.intersection(s)))
            .collect();
        Self::from_neighborhoods(nbhd)
    }

    /// Builds the space whose minimal neighborhoods are `nbhd` (already
    /// intersection-closed per point); every union of them is open.
    fn from_neighborhoods(nbhd: Vec<PointSet>) -> Result<Self> {
        let n = nbhd.len();
        for x in 0..n {
            for y in x + 1..n {
                if nbhd[x] == nbhd[y] {
                    return Err(Error::NotT0(x, y));
                }
            }
        }
        let order = FinitePoset::from_upsets(nbhd.clone())?;
        let opens = order.upsets()?;
        let pclosure = (0..n).map(|x| order.down(x)).collect();
        Ok(FiniteSpace { n, opens, names: None, nbhd, pclosure })
    }

    /// Validates an explicit open family.
    pub fn from_opens(n: usize, opens: &[PointSet]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::CapExceeded { what: "point count", size: n, cap: MAX_POINTS });
        }
        let full = PointSet::full(n);
        for &u in opens {
            check_range(n, u)?;
        }
        let set: HashSet<PointSet> = opens.iter().copied().collect();
        if !set.contains(&PointSet::EMPTY) {
            return Err(Error::NotATopology("missing the empty set".into()));
        }
        if !set.contains(&full) {
            return Err(Error::NotATopology("missing the full set".into()));
        }
        let list: Vec<PointSet> = set.iter().copied().collect();
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                if !set.contains(&a.union(b)) {
                    return Err(Error::NotATopology(format!("{a:?} ∪ {b:?} is not open")));
                }
                if !set.contains(&a.intersection(b)) {
                    return Err(Error::NotATopology(format!("{a:?} ∩ {b:?} is not open")));
                }
            }
        }
        let nbhd: Vec<PointSet> =
            (0..n).map(|x| list.iter().filter(|u| u.contains(x)).fold(full, |acc, &u| acc.intersection(u))).collect();
        let space = Self::from_neighborhoods(nbhd)?;
        debug_assert_eq!(space.opens.len(), list.len());
        Ok(space)
    }

    /// Alexandroff topology (all up-sets) of a poset.
    pub fn alexandroff(p: &FinitePoset) -> Self {
        Self::from_neighborhoods(p.upsets_of_points().to_vec()).expect("a poset yields a T0 space")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::Parse(format!("{} names for {} points", names.len(), self.n)));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// One-point space.
    pub fn point() -> Self {
        Self::generate(1, &[]).expect("one point is T0")
    }

    /// Points 0 < 1, opens ∅, {1}, {0,1}.
    pub fn sierpinski() -> Self {
        Self::generate(2, &[PointSet::singleton(1)]).expect("Sierpinski space is T0")
    }

    pub fn discrete(n: usize) -> Self {
        let sub: Vec<_> = (0..n).map(PointSet::singleton).collect();
        Self::generate(n, &sub).expect("discrete space is T0")
    }

    /// Points a=0, b=1, c=2 with opens ∅, {b}, {c}, {b,c}, X.
    pub fn v_space() -> Self {
        Self::generate(3, &[PointSet::singleton(1), PointSet::singleton(2)])
            .expect("V-space is T0")
            .with_names(vec!["a".into(), "b".into(), "c".into()])
            .expect("three names")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(v) => v[x].clone(),
            None => format!("p{x}"),
        }
    }

    /// Canonically ordered open family.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Closed sets (complements of opens), canonically ordered.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut v: Vec<_> = self.opens.iter().map(|u| u.complement(self.n)).collect();
        canonicalize(&mut v);
        v
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.opens.binary_search_by_key(&a.canonical_key(), |u| u.canonical_key()).is_ok()
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        a.is_subset(self.full()) && self.is_open(a.complement(self.n))
    }

    /// Minimal open neighborhood of `x`.
    pub fn neighborhood(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    /// `cl{x}`
    pub fn point_closure(&self, x: usize) -> PointSet {
        self.pclosure[x]
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |s, x| s.union(self.pclosure[x]))
    }

    /// Intersection of all opens containing `a`.
    pub fn saturation(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |s, x| s.union(self.nbhd[x]))
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        (0..self.n).filter(|&x| self.nbhd[x].is_subset(a)).collect()
    }

    /// `x <= y` iff `x ∈ cl{y}`.
    pub fn specialization_leq(&self, x: usize, y: usize) -> bool {
        self.pclosure[y].contains(x)
    }

    pub fn specialization_order(&self) -> FinitePoset {
        FinitePoset::from_upsets(self.nbhd.clone()).expect("T0 specialization preorder is a partial order")
    }

    /// `S_c(X)`: the closures of points, canonically ordered.
    pub fn point_closures(&self) -> Vec<PointSet> {
        let mut v = self.pclosure.clone();
        canonicalize(&mut v);
        v
    }

    /// Subspace on `points` (re-indexed in the given order).
    pub fn subspace(&self, points: &[usize]) -> Result<Self> {
        for &index in points {
            if index >= self.n {
                return Err(Error::PointOutOfRange { index, n: self.n });
            }
        }
        let sub: Vec<PointSet> = self
            .opens
            .iter()
            .map(|u| points.iter().enumerate().filter(|(_, &p)| u.contains(p)).map(|(i, _)| i).collect())
            .collect();
        let space = Self::generate(points.len(), &sub)?;
        Ok(match &self.names {
            Some(names) => {
                let sub_names = points.iter().map(|&p| names[p].clone()).collect();
                space.with_names(sub_names)?
            }
            None => space,
        })
    }

    /// Image of the space under the point bijection `perm` (`x ↦ perm[x]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Parse("relabeling has the wrong length".into()));
        }
        let moved: Vec<PointSet> = self.opens.iter().map(|u| u.iter().map(|x| perm[x]).collect()).collect();
        Self::from_opens(self.n, &moved)
    }

    /// A homeomorphism `self → other` as a point table, if one exists.
    ///
    /// Identical open families short-circuit to the identity; otherwise a
    /// backtracking search over bijections preserving the specialization order,
    /// confirmed by mapping every open onto an open.
    pub fn homeomorphism_to(&self, other: &FiniteSpace) -> Option<Vec<usize>> {
        if self.n != other.n || self.opens.len() != other.opens.len() {
            return None;
        }
        if self.opens == other.opens {
            return Some((0..self.n).collect());
        }
        let sig = |s: &FiniteSpace, x: usize| (s.nbhd[x].len(), s.pclosure[x].len());
        let mut table = vec![usize::MAX; self.n];
        let mut used = PointSet::EMPTY;
        let found = self.homeo_search(other, 0, &mut table, &mut used, &sig);
        found.then_some(table)
    }

    fn homeo_search(
        &self,
        other: &FiniteSpace,
        x: usize,
        table: &mut [usize],
        used: &mut PointSet,
        sig: &dyn Fn(&FiniteSpace, usize) -> (usize, usize),
    ) -> bool {
        if x == self.n {
            return self.opens.iter().all(|u| other.is_open(u.iter().map(|p| table[p]).collect()));
        }
        for y in 0..other.n {
            if used.contains(y) || sig(self, x) != sig(other, y) {
                continue;
            }
            let consistent = (0..x).all(|p| {
                self.specialization_leq(p, x) == other.specialization_leq(table[p], y)
                    && self.specialization_leq(x, p) == other.specialization_leq(y, table[p])
            });
            if !consistent {
                continue;
            }
            table[x] = y;
            *used = used.with(y);
            if self.homeo_search(other, x + 1, table, used, sig) {
                return true;
            }
            *used = used.without(y);
        }
        table[x] = usize::MAX;
        false
    }

    pub fn is_homeomorphic(&self, other: &FiniteSpace) -> bool {
        self.homeomorphism_to(other).is_some()
    }

    /// Set given by point names.
    pub fn set_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet> {
        names
            .iter()
            .map(|s| {
                let s = s.as_ref();
                (0..self.n).find(|&x| self.name(x) == s).ok_or_else(|| Error::Parse(format!("unknown point {s:?}")))
            })
            .collect()
    }

    pub fn set_names(&self, a: PointSet) -> Vec<String> {
        a.iter().map(|x| self.name(x)).collect()
    }
}

/// A canonically ordered family of subsets of one space's points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct SetFamily {
    n: usize,
    members: Vec<PointSet>,
}

impl SetFamily {
    pub fn new(n: usize, mut members: Vec<PointSet>) -> Self {
        debug_assert!(members.iter().all(|m| m.is_subset(PointSet::full(n))));
        canonicalize(&mut members);
        SetFamily { n, members }
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: PointSet) -> bool {
        self.members.binary_search_by_key(&a.canonical_key(), |m| m.canonical_key()).is_ok()
    }

    pub fn index_of(&self, a: PointSet) -> Option<usize> {
        self.members.binary_search_by_key(&a.canonical_key(), |m| m.canonical_key()).ok()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn iter(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.members.iter().copied()
    }

    /// Intersection of all members (the full set for an empty family).
    pub fn intersection(&self) -> PointSet {
        self.iter().fold(PointSet::full(self.n), |a, b| a.intersection(b))
    }

    pub fn union(&self) -> PointSet {
        self.iter().fold(PointSet::EMPTY, |a, b| a.union(b))
    }
}
