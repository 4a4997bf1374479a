//! `ℕ` with the cofinite topology.
//!
//! Closed sets are the finite sets and `ℕ`; every subset is compact and,
//! since the specialization order is discrete, saturated.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CofiniteClosed {
    Finite(BTreeSet<u64>),
    Whole,
}

impl CofiniteClosed {
    pub fn contains(&self, k: u64) -> bool {
        match self {
            CofiniteClosed::Finite(s) => s.contains(&k),
            CofiniteClosed::Whole => true,
        }
    }

    /// `cl{k} = {k}`: finite sets are closed.
    pub fn point_closure(k: u64) -> Self {
        CofiniteClosed::Finite(BTreeSet::from([k]))
    }
}

/// A point outside the finite set `f`.
pub fn point_outside(f: &BTreeSet<u64>) -> u64 {
    f.iter().next_back().map_or(0, |m| m + 1)
}

/// The finite set `F` of a member `ℕ ∖ F` of `𝒦 = {ℕ ∖ F : F finite}` that
/// misses the proper closed set `s`: take `F = s`.
pub fn missed_member(s: &BTreeSet<u64>) -> (BTreeSet<u64>, bool) {
    let f = s.clone();
    let misses = s.iter().all(|k| f.contains(k));
    (f, misses)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofiniteReport {
    pub not_sober: Certificate,
    pub not_omega_wf: Certificate,
    /// `ℕ` meets every sampled member of `𝒦`.
    pub whole_in_m_family: bool,
    /// Every sampled proper closed set misses some member of `𝒦`.
    pub whole_minimal: bool,
    /// Sampled pairs of `𝒦` have their intersection in `𝒦`.
    pub family_filtered: bool,
    /// Directed sets are singletons whose closures are finite, so `ℕ` is not one.
    pub whole_not_directed_closure: bool,
    pub d_space: bool,
}

/// Deterministic sample of finite subsets of `ℕ`.
pub fn sample_finite_sets(count: usize) -> Vec<BTreeSet<u64>> {
    (0..count as u64).map(|i| (0..(i % 7)).map(|j| (i * 31 + j * j * 17 + j) % 97).collect()).collect()
}

pub fn cofinite_checks() -> CofiniteReport {
    cofinite_checks_with(&sample_finite_sets(200))
}

pub fn cofinite_checks_with(samples: &[BTreeSet<u64>]) -> CofiniteReport {
    let pairs: Vec<(Vec<u64>, Vec<u64>)> = samples
        .iter()
        .zip(samples.iter().rev())
        .map(|(a, b)| (a.iter().copied().collect(), b.iter().copied().collect()))
        .collect();
    let candidates: Vec<u64> = (0..16).chain([97, 1000, u64::MAX - 1]).collect();
    let not_sober = Certificate::CofiniteNotSober { open_pairs: pairs, candidates: candidates.clone() };
    let not_omega_wf = Certificate::CofiniteNotOmegaWf { members: (0..32).collect(), probes: candidates.clone() };

    let whole_in_m_family =
        samples.iter().all(|f| CofiniteClosed::Whole.contains(point_outside(f)) && !f.contains(&point_outside(f)));
    let whole_minimal = samples.iter().all(|s| {
        let (f, misses) = missed_member(s);
        misses && s.is_subset(&f)
    });
    let family_filtered = samples.iter().zip(samples.iter().skip(1)).all(|(a, b)| {
        // (ℕ∖a) ∩ (ℕ∖b) = ℕ∖(a∪b), a member below both
        let u: BTreeSet<u64> = a.union(b).copied().collect();
        a.is_subset(&u) && b.is_subset(&u) && !u.contains(&point_outside(&u))
    });
    let whole_not_directed_closure =
        candidates.iter().all(|&k| CofiniteClosed::point_closure(k) != CofiniteClosed::Whole);
    // singleton directed sets {k} have generic point k
    let d_space = candidates.iter().all(|&k| CofiniteClosed::point_closure(k).contains(k));
    CofiniteReport {
        not_sober,
        not_omega_wf,
        whole_in_m_family,
        whole_minimal,
        family_filtered,
        whole_not_directed_closure,
        d_space,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses() {
        assert_eq!(point_outside(&BTreeSet::from([0, 1, 2])), 3);
        let (f, misses) = missed_member(&BTreeSet::from([5, 9]));
        assert!(misses && f == BTreeSet::from([5, 9]));
    }

    #[test]
    fn report_passes() {
        let r = cofinite_checks();
        assert!(r.not_sober.check().is_ok());
        assert!(r.not_omega_wf.check().is_ok());
        assert!(r.whole_in_m_family && r.whole_minimal && r.family_filtered);
        assert!(r.whole_not_directed_closure && r.d_space);
    }
}
