//! The complete chain `[0, ω₁]` under its Scott and ω-Scott topologies.
//!
//! Nonempty up-sets of the chain are rays `[lo, ω₁]`, and these are the only
//! sets the procedures below need to reason about.

use serde::{Deserialize, Serialize};

use super::ordinal::{Cofinality, Ordinal};
use crate::certificate::Certificate;
use crate::error::{Error, Result};

/// The up-set `[lo, ω₁]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainRay {
    pub lo: Ordinal,
}

impl ChainRay {
    pub fn new(lo: Ordinal) -> Self {
        ChainRay { lo }
    }

    pub fn top() -> Self {
        ChainRay { lo: Ordinal::Omega1 }
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        x >= &self.lo
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &ChainRay) -> bool {
        self.lo >= other.lo
    }
}

/// A ray is Scott-open iff no directed set, in particular no cofinal
/// sequence, reaches `lo` from strictly below: `lo` must not be a limit.
pub fn chain_is_scott_open(r: &ChainRay) -> bool {
    !r.lo.is_limit()
}

/// Only countable directed sets matter. `ω₁` is not the sup of any of them.
pub fn chain_is_omega_scott_open(r: &ChainRay) -> bool {
    !r.lo.is_limit() || r.lo.cofinality() == Cofinality::Omega1
}

/// Candidate generic points used by [`chain_not_dspace_certificate`].
pub fn default_generic_candidates() -> Vec<Ordinal> {
    let p = Ordinal::from_pairs;
    vec![
        Ordinal::zero(),
        Ordinal::finite(1),
        Ordinal::finite(41),
        Ordinal::omega(),
        p(&[(1, 5)]),
        p(&[(1, 5), (0, 3)]),
        Ordinal::omega_pow(2),
        p(&[(3, 2), (1, 1), (0, 7)]),
        Ordinal::omega_pow(9),
        Ordinal::Omega1,
    ]
}

/// `[0, ω₁)` is directed and ω-Scott-closed, but its closure has no generic point.
pub fn chain_not_dspace_certificate() -> Certificate {
    chain_not_dspace_certificate_with(default_generic_candidates())
}

pub fn chain_not_dspace_certificate_with(candidates: Vec<Ordinal>) -> Certificate {
    let refutations = candidates.iter().map(refute_generic).collect();
    Certificate::ChainNotDSpace { candidates, refutations }
}

/// A point of `[0, ω₁)` outside `cl{x} = ↓x`, or `ω₁` itself when `x = ω₁`
/// (which lies outside the closed set).
pub(crate) fn refute_generic(x: &Ordinal) -> Ordinal {
    x.succ().unwrap_or(Ordinal::Omega1)
}

/// A countable descending family of rays (`lo` non-decreasing).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RayFamily {
    /// Eventually constant at its last member.
    Finite { members: Vec<ChainRay> },
    /// `prefix`, then `[limit[start + j], ω₁]` for `j = 0, 1, …`.
    Sequence { prefix: Vec<ChainRay>, limit: Ordinal, start: u64 },
}

impl RayFamily {
    pub fn validate(&self) -> Result<()> {
        let prefix = match self {
            RayFamily::Finite { members } => {
                if members.is_empty() {
                    return Err(Error::IllFormedFamily("empty family".into()));
                }
                members
            }
            RayFamily::Sequence { prefix, limit, start } => {
                if limit.is_omega1() {
                    return Err(Error::IllFormedFamily(
                        "no countable sequence of countable ordinals has supremum ω₁".into(),
                    ));
                }
                if !limit.is_limit() {
                    return Err(Error::IllFormedFamily(format!("{limit} is not a limit ordinal")));
                }
                if let (Some(last), Some(first)) = (prefix.last(), limit.fundamental(*start)) {
                    if last.lo > first {
                        return Err(Error::IllFormedFamily("prefix exceeds the sequence".into()));
                    }
                }
                prefix
            }
        };
        if prefix.windows(2).any(|w| w[0].lo > w[1].lo) {
            return Err(Error::IllFormedFamily("family is not descending".into()));
        }
        Ok(())
    }

    pub fn member(&self, i: u64) -> ChainRay {
        match self {
            RayFamily::Finite { members } => members[(i as usize).min(members.len() - 1)].clone(),
            RayFamily::Sequence { prefix, limit, start } => match prefix.get(i as usize) {
                Some(r) => r.clone(),
                None => ChainRay::new(limit.fundamental(start + i - prefix.len() as u64).expect("validated limit")),
            },
        }
    }

    /// `⋂ family = [sup lo_i, ω₁]`.
    pub fn intersection(&self) -> ChainRay {
        match self {
            RayFamily::Finite { members } => members.last().expect("nonempty").clone(),
            RayFamily::Sequence { limit, .. } => ChainRay::new(limit.clone()),
        }
    }
}

/// Index of a member inside `u`, given `⋂ family ⊆ u`.
pub fn chain_omega_wf_select(family: &RayFamily, u: &ChainRay) -> Result<u64> {
    family.validate()?;
    if !chain_is_omega_scott_open(u) {
        return Err(Error::NotOpen);
    }
    if !family.intersection().is_subset(u) {
        return Err(Error::NotCovered);
    }
    match family {
        RayFamily::Finite { members } => {
            Ok(members.iter().position(|r| r.is_subset(u)).expect("last member is inside") as u64)
        }
        RayFamily::Sequence { prefix, limit, start } => {
            if let Some(i) = prefix.iter().position(|r| r.is_subset(u)) {
                return Ok(i as u64);
            }
            // u.lo < limit: u open forbids u.lo = limit
            let reach = limit.fundamental_index_reaching(&u.lo).ok_or(Error::NotCovered)?;
            Ok(prefix.len() as u64 + reach.saturating_sub(*start))
        }
    }
}

/// A countable neighbourhood base at a point of the ω-Scott chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ChainBase {
    Single {
        ray: ChainRay,
    },
    /// `[limit[n] + 1, ω₁]` for `n ∈ ℕ`.
    Sequence {
        limit: Ordinal,
    },
}

impl ChainBase {
    pub fn member(&self, n: u64) -> ChainRay {
        match self {
            ChainBase::Single { ray } => ray.clone(),
            ChainBase::Sequence { limit } => {
                ChainRay::new(limit.fundamental(n).and_then(|b| b.succ()).expect("countable limit"))
            }
        }
    }
}

pub fn chain_first_countable_base(x: &Ordinal) -> ChainBase {
    if x.is_limit() && !x.is_omega1() {
        ChainBase::Sequence { limit: x.clone() }
    } else {
        ChainBase::Single { ray: ChainRay::new(x.clone()) }
    }
}

/// Checks `base` at `x` for the first `depth` members and against each
/// candidate open ray containing `x`.
pub fn verify_chain_base(base: &ChainBase, x: &Ordinal, candidates: &[ChainRay], depth: u64) -> bool {
    let members_ok = (0..depth).all(|n| {
        let r = base.member(n);
        chain_is_omega_scott_open(&r) && r.contains(x)
    });
    let refines = candidates.iter().filter(|u| chain_is_omega_scott_open(u) && u.contains(x)).all(|u| match base {
        ChainBase::Single { ray } => ray.is_subset(u),
        ChainBase::Sequence { limit } => {
            limit.fundamental_index_reaching(&u.lo).is_some_and(|n| base.member(n).is_subset(u))
        }
    });
    members_ok && refines
}
