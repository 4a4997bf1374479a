//! Fixed-width bit sets of point indices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest point count a [`PointSet`] can address.
pub const MAX_POINTS: usize = 64;

/// A subset of `{0, .., n-1}` stored as a 64-bit mask.
///
/// The owning space carries `n`; every constructor that takes `n` masks the
/// bits so that the representation never mentions points `>= n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_POINTS);
        PointSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(PointSet::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_POINTS && self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        PointSet(self.0 | 1u64 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        PointSet(self.0 & !(1u64 << i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical sort key: cardinality first, then numeric value.
    pub fn canonical_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }

    /// All subsets of `self`, in increasing numeric order.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: Some(0) }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        PointSet::from_indices(iter)
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&i| i >= MAX_POINTS) {
            return Err(serde::de::Error::custom(format!("point index {bad} too large")));
        }
        Ok(PointSet::from_indices(v))
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

/// Subset enumeration by the `(s - mask) & mask` walk.
pub struct Subsets {
    mask: u64,
    cur: Option<u64>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.cur?;
        let next = cur.wrapping_sub(self.mask) & self.mask;
        self.cur = (next != 0).then_some(next);
        Some(PointSet(cur))
    }
}

/// Sort and deduplicate into canonical `(popcount, value)` order.
pub fn canonicalize(sets: &mut Vec<PointSet>) {
    sets.sort_by_key(|s| s.canonical_key());
    sets.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_three_bits() {
        let s = PointSet::from_indices([0, 2, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], PointSet::EMPTY);
    }

    #[test]
    fn full_and_complement() {
        assert_eq!(PointSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(PointSet::full(64).len(), 64);
        assert_eq!(PointSet::from_indices([1]).complement(3).to_vec(), vec![0, 2]);
    }

    #[test]
    fn canonical_order_is_popcount_then_value() {
        let mut v = vec![
            PointSet::from_bits(0b11),
            PointSet::from_bits(0b100),
            PointSet::from_bits(0b1),
            PointSet::from_bits(0b100),
        ];
        canonicalize(&mut v);
        assert_eq!(v, vec![PointSet::from_bits(1), PointSet::from_bits(4), PointSet::from_bits(3)]);
    }

    #[test]
    fn serde_as_index_list() {
        let s = PointSet::from_indices([3, 1]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, "[1,3]");
        let back: PointSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<PointSet>("[64]").is_err());
    }
}
