//! The invariant battery run on every small finite space by `fuzz` and the
//! exhaustive suite.

use std::sync::Arc;

use crate::classify::{classify, omega_d_conditions, OMEGA_WELL_FILTERED, WELL_FILTERED};
use crate::error::Result;
use crate::reflection::{reflect_omega, sobrify};
use crate::rudin::FamilyChain;
use crate::space::FiniteSpace;
use crate::topology::sober_check;

pub const BATTERY: [&str; 6] = [
    "sober",
    "family-chain-equal",
    "omega-d-conditions-agree",
    "wf-iff-omega-wf",
    "omega-reflection-homeomorphic",
    "sobrification-homeomorphic",
];

/// One `(name, passed)` entry per item of [`BATTERY`].
pub fn finite_battery(x: &Arc<FiniteSpace>) -> Result<Vec<(&'static str, bool)>> {
    let report = classify(x)?;
    let w = reflect_omega(x)?;
    let s = sobrify(x)?;
    let results = [
        sober_check(x).sober,
        FamilyChain::compute(x)?.all_equal(),
        omega_d_conditions(x)?.agree(),
        report.holds(WELL_FILTERED) == report.holds(OMEGA_WELL_FILTERED),
        w.eta.is_homeomorphism() && w.target.is_homeomorphic(x),
        s.eta.is_homeomorphism() && s.target.is_homeomorphic(x),
    ];
    Ok(BATTERY.iter().copied().zip(results).collect())
}
