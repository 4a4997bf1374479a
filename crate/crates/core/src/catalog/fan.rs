//! The fan lattice `L = {⊥} ∪ (ℕ × ℕ) ∪ {⊤}` with its Scott topology.
//!
//! Columns `{n} × ℕ` are chains whose supremum is `⊤`; points of different
//! columns are incomparable. Open sets are described by a per-column
//! threshold: `(n, m) ∈ U` iff `m >= threshold(n)`. A threshold of `None`
//! stands for `∞` (the column misses `U`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FanPoint {
    Bottom,
    Pair(u64, u64),
    Top,
}

/// The order of `L`.
pub fn fan_leq(a: FanPoint, b: FanPoint) -> bool {
    match (a, b) {
        (FanPoint::Bottom, _) | (_, FanPoint::Top) => true,
        (FanPoint::Pair(n1, m1), FanPoint::Pair(n2, m2)) => n1 == n2 && m1 <= m2,
        _ => false,
    }
}

/// Binary join; two points of different columns join at `⊤`.
pub fn fan_join(a: FanPoint, b: FanPoint) -> FanPoint {
    if fan_leq(a, b) {
        b
    } else if fan_leq(b, a) {
        a
    } else {
        FanPoint::Top
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FanOpen {
    pub has_bottom: bool,
    pub has_top: bool,
    pub default: Option<u64>,
    /// Serialized as `[column, threshold]` pairs.
    #[serde(default, with = "pairs")]
    pub exceptions: BTreeMap<u64, Option<u64>>,
}

mod pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<u64, Option<u64>>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, Option<u64>>, D::Error> {
        Ok(Vec::<(u64, Option<u64>)>::deserialize(d)?.into_iter().collect())
    }
}

impl FanOpen {
    pub fn empty() -> Self {
        FanOpen { has_bottom: false, has_top: false, default: None, exceptions: BTreeMap::new() }
    }

    pub fn whole() -> Self {
        FanOpen { has_bottom: true, has_top: true, default: Some(0), exceptions: BTreeMap::new() }
    }

    /// `{⊤}` plus every column from `default` upward.
    pub fn uniform(default: Option<u64>) -> Self {
        FanOpen { has_bottom: false, has_top: true, default, exceptions: BTreeMap::new() }
    }

    pub fn with_column(mut self, n: u64, t: Option<u64>) -> Self {
        self.exceptions.insert(n, t);
        self
    }

    pub fn threshold(&self, n: u64) -> Option<u64> {
        *self.exceptions.get(&n).unwrap_or(&self.default)
    }

    pub fn contains(&self, p: FanPoint) -> bool {
        match p {
            FanPoint::Bottom => self.has_bottom,
            FanPoint::Top => self.has_top,
            FanPoint::Pair(n, m) => self.threshold(n).is_some_and(|t| m >= t),
        }
    }

    fn thresholds(&self) -> impl Iterator<Item = Option<u64>> + '_ {
        std::iter::once(self.default).chain(self.exceptions.values().copied())
    }

    /// A column governed by the default threshold.
    pub fn representative_column(&self) -> u64 {
        (0..).find(|n| !self.exceptions.contains_key(n)).expect("finitely many exceptions")
    }

    pub fn is_upset(&self) -> bool {
        let any_column_point = self.thresholds().any(|t| t.is_some());
        let bottom_ok = !self.has_bottom || (self.has_top && self.thresholds().all(|t| t == Some(0)));
        bottom_ok && (!any_column_point || self.has_top)
    }
}

/// Scott-open: an up-set, and every column chain whose sup `⊤` lies in `U`
/// must already meet `U`.
pub fn fan_is_scott_open(u: &FanOpen) -> bool {
    u.is_upset() && (!u.has_top || u.thresholds().all(|t| t.is_some()))
}

/// A directed subset of `L`, described by shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FanDirected {
    /// A finite directed set.
    Finite { points: Vec<FanPoint> },
    /// The tail `(column, from), (column, from + 1), …`.
    ColumnTail { column: u64, from: u64 },
}

impl FanDirected {
    pub fn validate(&self) -> Result<()> {
        if let FanDirected::Finite { points } = self {
            if points.is_empty() {
                return Err(Error::EmptySet);
            }
            for &a in points {
                for &b in points {
                    if !points.iter().any(|&c| fan_leq(a, c) && fan_leq(b, c)) {
                        return Err(Error::PremiseViolated(format!("{a:?} and {b:?} have no upper bound")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Supremum by structure: a finite directed set has a greatest element, and
/// an unbounded column tail sups to `⊤`.
pub fn fan_sup(d: &FanDirected) -> Result<FanPoint> {
    d.validate()?;
    Ok(match d {
        FanDirected::Finite { points } => {
            *points.iter().find(|&&c| points.iter().all(|&p| fan_leq(p, c))).expect("validated directed")
        }
        FanDirected::ColumnTail { .. } => FanPoint::Top,
    })
}

/// Diagonalizes against a claimed countable base `n ↦ U_n` at `⊤`.
///
/// Each `U_n` contains `(n, m_n)` with `m_n` its own column-`n` threshold;
/// the open with column thresholds `m_n + 1` contains `⊤` and no `U_n`.
pub fn fan_diagonal_refuter(candidate: impl Fn(u64) -> FanOpen, test_bound: u64) -> Result<Certificate> {
    let mut base = Vec::new();
    let mut witnesses = Vec::new();
    for n in 0..=test_bound {
        let u = candidate(n);
        if !fan_is_scott_open(&u) || !u.has_top {
            return Err(Error::NotNeighborhoodOfTop(n as usize));
        }
        witnesses.push(u.threshold(n).expect("open neighbourhoods of ⊤ meet every column"));
        base.push(u);
    }
    let mut diagonal = FanOpen::uniform(Some(0));
    for (n, &m) in witnesses.iter().enumerate() {
        diagonal.exceptions.insert(n as u64, Some(m + 1));
    }
    Ok(Certificate::FanNotFirstCountable { base, witnesses, diagonal })
}

/// The complement of a Scott-open set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanClosed {
    pub complement: FanOpen,
}

impl FanClosed {
    pub fn new(complement: FanOpen) -> Result<Self> {
        if !fan_is_scott_open(&complement) {
            return Err(Error::NotOpen);
        }
        Ok(FanClosed { complement })
    }

    /// `⊥` together with the first `h` points of each listed column.
    pub fn columns(heights: &BTreeMap<u64, u64>) -> Self {
        let mut u = FanOpen::uniform(Some(0));
        for (&n, &h) in heights {
            u.exceptions.insert(n, Some(h));
        }
        FanClosed { complement: u }
    }

    pub fn whole() -> Self {
        FanClosed { complement: FanOpen::empty() }
    }

    /// `cl{p} = ↓p`
    pub fn principal(p: FanPoint) -> Self {
        match p {
            FanPoint::Bottom => Self::columns(&BTreeMap::new()),
            FanPoint::Pair(n, m) => Self::columns(&BTreeMap::from([(n, m + 1)])),
            FanPoint::Top => Self::whole(),
        }
    }

    pub fn contains(&self, p: FanPoint) -> bool {
        !self.complement.contains(p)
    }

    pub fn is_empty(&self) -> bool {
        self.complement.has_bottom
    }

    /// Number of column-`n` points, `None` for the whole column.
    pub fn height(&self, n: u64) -> Option<u64> {
        self.complement.threshold(n)
    }

    /// Columns with at least one point, capped at two.
    fn occupied_columns(&self) -> Vec<u64> {
        let mut cols: Vec<u64> =
            self.complement.exceptions.iter().filter(|(_, t)| **t != Some(0)).map(|(&n, _)| n).collect();
        if self.complement.default != Some(0) {
            cols.push(self.complement.representative_column());
        }
        cols.sort_unstable();
        cols.truncate(2);
        cols
    }
}

fn scan_columns(sets: &[&FanClosed]) -> Vec<u64> {
    let mut cols: Vec<u64> = sets.iter().flat_map(|c| c.complement.exceptions.keys().copied()).collect();
    let spare = (0..).find(|n| !cols.contains(n)).expect("finite");
    cols.push(spare);
    cols.sort_unstable();
    cols.dedup();
    cols
}

fn height_le(a: Option<u64>, b: Option<u64>) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

/// `a ⊆ b` for closed sets, by comparing `⊥`, `⊤` and column heights.
pub fn fan_closed_subset(a: &FanClosed, b: &FanClosed) -> bool {
    let pts = [FanPoint::Bottom, FanPoint::Top];
    pts.iter().all(|&p| !a.contains(p) || b.contains(p))
        && scan_columns(&[a, b]).into_iter().all(|n| height_le(a.height(n), b.height(n)))
}

/// The unique generic point of an irreducible closed set.
pub fn fan_generic_point(c: &FanClosed) -> Option<FanPoint> {
    if c.is_empty() {
        return None;
    }
    if c.contains(FanPoint::Top) {
        return Some(FanPoint::Top);
    }
    match c.occupied_columns().as_slice() {
        [] => Some(FanPoint::Bottom),
        [n] => Some(FanPoint::Pair(*n, c.height(*n).expect("proper closed sets have finite columns") - 1)),
        _ => None,
    }
}

/// Writes a closed set meeting two columns as a union of two proper closed subsets.
pub fn fan_split(c: &FanClosed) -> Option<(FanClosed, FanClosed)> {
    if c.is_empty() || c.contains(FanPoint::Top) {
        return None;
    }
    let cols = c.occupied_columns();
    if cols.len() < 2 {
        return None;
    }
    let a = cols[0];
    let first = FanClosed::columns(&BTreeMap::from([(a, c.height(a)?)]));
    let mut rest = c.clone();
    rest.complement.exceptions.insert(a, Some(0));
    Some((first, rest))
}

/// `c = f1 ∪ f2` with `c ⊄ f1` and `c ⊄ f2`, all three closed.
pub fn validate_fan_split(c: &FanClosed, f1: &FanClosed, f2: &FanClosed) -> bool {
    let all_closed = [c, f1, f2].iter().all(|s| fan_is_scott_open(&s.complement));
    let pts = [FanPoint::Bottom, FanPoint::Top];
    let union_pts = pts.iter().all(|&p| c.contains(p) == (f1.contains(p) || f2.contains(p)));
    let union_cols = scan_columns(&[c, f1, f2]).into_iter().all(|n| {
        let (h1, h2) = (f1.height(n), f2.height(n));
        let max = if height_le(h1, h2) { h2 } else { h1 };
        c.height(n) == max
    });
    all_closed && union_pts && union_cols && !fan_closed_subset(c, f1) && !fan_closed_subset(c, f2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanSoberReport {
    pub sober: bool,
    /// Shapes of the irreducible closed sets, each with its generic point.
    pub irreducible_kinds: Vec<String>,
}

/// Proper closed sets have finite column heights; one meeting two columns
/// splits by [`fan_split`]. What remains is `{⊥}`, `↓(n, m)` and `L`.
pub fn fan_sober_check() -> FanSoberReport {
    let examples = [FanPoint::Bottom, FanPoint::Pair(4, 7), FanPoint::Top];
    let sober = examples.iter().all(|&p| fan_generic_point(&FanClosed::principal(p)) == Some(p));
    FanSoberReport {
        sober, irreducible_kinds: vec!["{⊥} ↦ ⊥".into(), "↓(n,m) ↦ (n,m)".into(), "L ↦ ⊤".into()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scott_openness() {
        let u = FanOpen::uniform(None).with_column(3, Some(5));
        assert!(u.is_upset());
        assert!(!fan_is_scott_open(&u));
        assert!(fan_is_scott_open(&FanOpen::uniform(Some(0))));
        assert!(fan_is_scott_open(&FanOpen::whole()));
        assert!(fan_is_scott_open(&FanOpen::empty()));
        let bad = FanOpen { has_bottom: true, ..FanOpen::uniform(Some(1)) };
        assert!(!bad.is_upset());
    }

    #[test]
    fn column_sup_is_top() {
        assert_eq!(fan_sup(&FanDirected::ColumnTail { column: 2, from: 0 }), Ok(FanPoint::Top));
        let fin = FanDirected::Finite { points: vec![FanPoint::Pair(1, 2), FanPoint::Bottom, FanPoint::Pair(1, 5)] };
        assert_eq!(fan_sup(&fin), Ok(FanPoint::Pair(1, 5)));
        let bad = FanDirected::Finite { points: vec![FanPoint::Pair(1, 2), FanPoint::Pair(2, 5)] };
        assert!(fan_sup(&bad).is_err());
    }

    #[test]
    fn diagonal_defeats_uniform_bases() {
        let cert = fan_diagonal_refuter(|n| FanOpen::uniform(Some(n)), 64).unwrap();
        assert!(cert.check().is_ok());
        let Certificate::FanNotFirstCountable { witnesses, diagonal, .. } = &cert else { panic!() };
        assert_eq!(witnesses[5], 5);
        assert_eq!(diagonal.threshold(5), Some(6));
        let err = fan_diagonal_refuter(|_| FanOpen::uniform(None), 3);
        assert_eq!(err, Err(Error::NotNeighborhoodOfTop(0)));
    }

    #[test]
    fn generic_points_and_splits() {
        assert_eq!(fan_generic_point(&FanClosed::principal(FanPoint::Pair(4, 7))), Some(FanPoint::Pair(4, 7)));
        assert_eq!(fan_generic_point(&FanClosed::whole()), Some(FanPoint::Top));
        let two = FanClosed::columns(&BTreeMap::from([(1, 3), (2, 5)]));
        assert_eq!(fan_generic_point(&two), None);
        let (f1, f2) = fan_split(&two).unwrap();
        assert!(validate_fan_split(&two, &f1, &f2));
        assert!(!validate_fan_split(&two, &f1, &f1));
        assert!(fan_sober_check().sober);
    }
}
