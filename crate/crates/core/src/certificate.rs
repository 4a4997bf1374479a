//! Re-checkable witnesses for negative verdicts.
//!
//! Finite-space certificates carry the whole space. Catalog certificates
//! carry finite descriptors whose checks use the symbolic decision
//! procedures in [`crate::catalog`].

use serde::{Deserialize, Serialize};

use crate::catalog::chain::{chain_is_omega_scott_open, refute_generic, ChainRay};
use crate::catalog::cofinite::{point_outside, CofiniteClosed};
use crate::catalog::fan::{fan_is_scott_open, FanOpen, FanPoint};
use crate::catalog::ordinal::Ordinal;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::powerspace::compact_saturated;
use crate::space::FiniteSpace;
use crate::topology::{generic_point, is_directed, is_irreducible};

/// A finite space as points plus opens.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub n: usize,
    pub opens: Vec<PointSet>,
}

impl SpaceSpec {
    pub fn of(x: &FiniteSpace) -> Self {
        SpaceSpec { n: x.len(), opens: x.opens().to_vec() }
    }

    pub fn to_space(&self) -> Result<FiniteSpace> {
        FiniteSpace::from_opens(self.n, &self.opens)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    NotSober,
    NotOmegaWf,
    NotDSpace,
    NotFirstCountable,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "kebab-case")]
pub enum Certificate {
    /// An irreducible closed set with no generic point.
    FiniteNotSober { space: SpaceSpec, closed: PointSet },
    /// A directed set whose closure has no generic point.
    FiniteNotDSpace { space: SpaceSpec, directed: PointSet },
    /// A filtered family in `K(X)` with `⋂ ⊆ U`, and for each member a point outside `U`.
    FiniteNotOmegaWf { space: SpaceSpec, family: Vec<PointSet>, open: PointSet, witnesses: Vec<usize> },
    /// Any other refuted finite property; re-checked by recomputation.
    FiniteCounterexample { space: SpaceSpec, property: String, witness: Vec<PointSet> },
    /// `[0, ω₁)` in the ω-Scott chain: each candidate `x` is refuted by
    /// a point of the set outside `↓x`.
    ChainNotDSpace { candidates: Vec<Ordinal>, refutations: Vec<Ordinal> },
    /// A claimed base `U_n` at `⊤`, witnesses `(n, m_n) ∈ U_n`, and the
    /// diagonal open with thresholds `m_n + 1`.
    FanNotFirstCountable { base: Vec<FanOpen>, witnesses: Vec<u64>, diagonal: FanOpen },
    /// The whole cofinite space is irreducible but no `cl{k}`.
    CofiniteNotSober { open_pairs: Vec<(Vec<u64>, Vec<u64>)>, candidates: Vec<u64> },
    /// `K_i = [i, ∞)` for the listed `i`; `⋂ K_i = ∅ = U` since `k ∉ K_{k+1}`.
    CofiniteNotOmegaWf { members: Vec<u64>, probes: Vec<u64> },
}

fn reject(why: impl Into<String>) -> Error {
    Error::CertificateRejected(why.into())
}

fn ensure(cond: bool, why: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(reject(why))
    }
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::FiniteNotSober { .. } | Certificate::CofiniteNotSober { .. } => CertificateKind::NotSober,
            Certificate::FiniteNotDSpace { .. } | Certificate::ChainNotDSpace { .. } => CertificateKind::NotDSpace,
            Certificate::FiniteNotOmegaWf { .. } | Certificate::CofiniteNotOmegaWf { .. } => {
                CertificateKind::NotOmegaWf
            }
            Certificate::FanNotFirstCountable { .. } => CertificateKind::NotFirstCountable,
            Certificate::FiniteCounterexample { .. } => CertificateKind::Counterexample,
        }
    }

    pub fn check(&self) -> Result<()> {
        match self {
            Certificate::FiniteNotSober { space, closed } => {
                let x = space.to_space()?;
                ensure(x.is_closed(*closed), "set is not closed")?;
                ensure(closed.is_subset(x.full()) && is_irreducible(&x, *closed)?, "set is not irreducible")?;
                ensure(generic_point(&x, *closed).is_none(), "set has a generic point")
            }
            Certificate::FiniteNotDSpace { space, directed } => {
                let x = space.to_space()?;
                ensure(!directed.is_empty() && directed.is_subset(x.full()), "bad directed set")?;
                ensure(is_directed(&x, *directed), "set is not directed")?;
                ensure(generic_point(&x, x.closure(*directed)).is_none(), "closure has a generic point")
            }
            Certificate::FiniteNotOmegaWf { space, family, open, witnesses } => {
                let x = space.to_space()?;
                let ks = compact_saturated(&x);
                ensure(!family.is_empty() && family.iter().all(|&k| ks.contains(k)), "member outside K(X)")?;
                let filtered = family
                    .iter()
                    .all(|&a| family.iter().all(|&b| family.iter().any(|&c| c.is_subset(a.intersection(b)))));
                ensure(filtered, "family is not filtered")?;
                ensure(x.is_open(*open), "U is not open")?;
                let meet = family.iter().fold(x.full(), |s, &k| s.intersection(k));
                ensure(meet.is_subset(*open), "intersection is not inside U")?;
                ensure(witnesses.len() == family.len(), "one witness per member")?;
                let outside = family.iter().zip(witnesses).all(|(&k, &w)| k.contains(w) && !open.contains(w));
                ensure(outside, "a witness is not in its member outside U")
            }
            Certificate::FiniteCounterexample { space, property, .. } => {
                let x = space.to_space()?;
                let report = crate::classify::classify(&x)?;
                match report.verdicts.get(property.as_str()) {
                    Some(false) => Ok(()),
                    Some(true) => Err(reject(format!("{property} holds"))),
                    None => Err(reject(format!("unknown property {property}"))),
                }
            }
            Certificate::ChainNotDSpace { candidates, refutations } => {
                // D = [0, ω₁) is closed: its complement {ω₁} is ω-Scott-open.
                ensure(chain_is_omega_scott_open(&ChainRay::top()), "{ω₁} is not open")?;
                ensure(!candidates.is_empty() && candidates.len() == refutations.len(), "candidate mismatch")?;
                ensure(candidates.iter().any(Ordinal::is_omega1), "ω₁ must be among the candidates")?;
                for (x, r) in candidates.iter().zip(refutations) {
                    let ok = if x.is_omega1() {
                        // cl{ω₁} = L is not D
                        r.is_omega1()
                    } else {
                        // cl{x} = ↓x is closed since (x, ω₁] = [x+1, ω₁] is open
                        let up = ChainRay::new(x.succ().expect("countable"));
                        chain_is_omega_scott_open(&up) && r == &refute_generic(x) && r > x && !r.is_omega1()
                    };
                    ensure(ok, &format!("candidate {x} is not refuted by {r}"))?;
                }
                Ok(())
            }
            Certificate::FanNotFirstCountable { base, witnesses, diagonal } => {
                ensure(!base.is_empty() && base.len() == witnesses.len(), "witness count mismatch")?;
                ensure(fan_is_scott_open(diagonal) && diagonal.has_top, "diagonal is not an open neighbourhood of ⊤")?;
                for (n, (u, &m)) in base.iter().zip(witnesses).enumerate() {
                    let p = FanPoint::Pair(n as u64, m);
                    ensure(fan_is_scott_open(u) && u.has_top, &format!("U_{n} is not a neighbourhood of ⊤"))?;
                    ensure(u.contains(p), &format!("witness not in U_{n}"))?;
                    ensure(!diagonal.contains(p), &format!("witness of U_{n} lies in the diagonal"))?;
                }
                Ok(())
            }
            Certificate::CofiniteNotSober { open_pairs, candidates } => {
                ensure(!open_pairs.is_empty() && !candidates.is_empty(), "empty certificate")?;
                // ℕ is closed; two nonempty opens ℕ∖F, ℕ∖G meet outside the finite F ∪ G
                for (f, g) in open_pairs {
                    let union = f.iter().chain(g).copied().collect();
                    let w = point_outside(&union);
                    ensure(!union.contains(&w), "opens do not meet")?;
                }
                for &k in candidates {
                    let cl = CofiniteClosed::point_closure(k);
                    let other = if k == u64::MAX { 0 } else { k + 1 };
                    ensure(cl != CofiniteClosed::Whole && !cl.contains(other), "candidate closure is everything")?;
                }
                Ok(())
            }
            Certificate::CofiniteNotOmegaWf { members, probes } => {
                ensure(!members.is_empty() && !probes.is_empty(), "empty certificate")?;
                ensure(members.windows(2).all(|w| w[0] < w[1]), "family is not descending")?;
                // U = ∅ is open (ℕ is closed); the point i lies in K_i but not in U
                let in_member = |i: u64, k: u64| k >= i;
                ensure(members.iter().all(|&i| in_member(i, i)), "a member is empty")?;
                for &k in probes {
                    let excluding = k.checked_add(1).ok_or_else(|| reject("probe has no excluding member"))?;
                    ensure(!in_member(excluding, k), "probe survives its excluding member")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::chain::chain_not_dspace_certificate;

    #[test]
    fn chain_certificate_rechecks() {
        assert!(chain_not_dspace_certificate().check().is_ok());
        let forged = Certificate::ChainNotDSpace {
            candidates: vec![Ordinal::omega(), Ordinal::Omega1],
            refutations: vec![Ordinal::finite(3), Ordinal::Omega1],
        };
        assert!(forged.check().is_err());
    }

    #[test]
    fn forged_finite_certificates_fail() {
        let x = FiniteSpace::v_space();
        let spec = SpaceSpec::of(&x);
        let not_sober = Certificate::FiniteNotSober { space: spec.clone(), closed: PointSet::from_indices([0, 1]) };
        assert!(not_sober.check().is_err());
        let not_d = Certificate::FiniteNotDSpace { space: spec.clone(), directed: PointSet::from_indices([0, 1]) };
        assert!(not_d.check().is_err());
        let not_wf = Certificate::FiniteNotOmegaWf {
            space: spec,
            family: vec![PointSet::from_indices([1, 2])],
            open: PointSet::from_indices([1, 2]),
            witnesses: vec![1],
        };
        assert!(not_wf.check().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let c = chain_not_dspace_certificate();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Certificate>(&s).unwrap(), c);
    }
}
