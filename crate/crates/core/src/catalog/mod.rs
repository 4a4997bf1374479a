//! Finitely presented infinite spaces with decision procedures and certificates.

pub mod chain;
pub mod cofinite;
pub mod fan;
pub mod ordinal;
pub mod stream;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use chain::{
    chain_first_countable_base, chain_is_omega_scott_open, chain_is_scott_open, chain_not_dspace_certificate,
    chain_omega_wf_select, verify_chain_base, ChainRay, RayFamily,
};
use fan::{
    fan_diagonal_refuter, fan_generic_point, fan_sober_check, fan_split, validate_fan_split, FanClosed, FanOpen,
};
use ordinal::{Ordinal, Term};

pub const CATALOG_SPACES: [&str; 4] =
    ["chain-omega1-omega-scott", "chain-omega1-scott", "fan-lattice-scott", "cofinite-nat"];

/// Epistemic status of a catalog verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Computed by a decision procedure.
    Decided,
    /// False, with a certificate that re-checks.
    CertifiedFalse,
    /// Asserted from the literature; only spot checks ran.
    AssertedWithSpotChecks,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogOutcome {
    pub space: String,
    pub check: String,
    pub verdict: bool,
    pub status: Status,
    /// Certificates re-check and spot checks agree with the verdict.
    pub consistent: bool,
    pub certificate: Option<Certificate>,
    pub details: serde_json::Value,
}

pub fn checks_for(space: &str) -> Result<&'static [&'static str]> {
    Ok(match space {
        "chain-omega1-omega-scott" => &["top-open", "d-space", "omega-wf", "well-filtered", "sober", "first-countable"],
        "chain-omega1-scott" => &["top-open", "d-space"],
        "fan-lattice-scott" => &["first-countable", "sober"],
        "cofinite-nat" => &["sober", "omega-wf", "d-space", "rudin"],
        other => return Err(Error::UnknownCatalogSpace(other.to_string())),
    })
}

/// Random ordinal below `ω^4`.
pub fn random_ordinal(rng: &mut impl Rng) -> Ordinal {
    let pairs: Vec<(u32, u64)> = (0..rng.gen_range(0..4)).map(|_| (rng.gen_range(0..4), rng.gen_range(1..9))).collect();
    Ordinal::from_pairs(&pairs)
}

fn random_limit(rng: &mut impl Rng) -> Ordinal {
    let mut o = random_ordinal(rng);
    if let Ordinal::Cnf(t) = &mut o {
        t.retain(|t| t.exp > 0);
        if t.is_empty() {
            t.push(Term { exp: rng.gen_range(1..4), coef: rng.gen_range(1..4) });
        }
    }
    o
}

/// A representable descending ray family and an ω-Scott-open `U ⊇ ⋂ family`.
pub fn random_ray_problem(rng: &mut impl Rng) -> (RayFamily, ChainRay) {
    if rng.gen_bool(0.4) {
        let mut los: Vec<Ordinal> = (0..rng.gen_range(1..6)).map(|_| random_ordinal(rng)).collect();
        los.sort();
        let sup = los.last().expect("nonempty").clone();
        let members = los.into_iter().map(ChainRay::new).collect();
        let lo = below_non_limit(rng, &sup);
        (RayFamily::Finite { members }, ChainRay::new(lo))
    } else {
        let limit = random_limit(rng);
        let start = rng.gen_range(0..5);
        let first = limit.fundamental(start).expect("limit");
        let mut prefix: Vec<Ordinal> =
            (0..rng.gen_range(0..3)).map(|_| random_ordinal(rng).min(first.clone())).collect();
        prefix.sort();
        let j = rng.gen_range(0..1000);
        let f = limit.fundamental(j).expect("limit");
        let lo = if rng.gen_bool(0.5) { f.succ().expect("countable") } else { below_non_limit(rng, &f) };
        let family = RayFamily::Sequence { prefix: prefix.into_iter().map(ChainRay::new).collect(), limit, start };
        (family, ChainRay::new(lo))
    }
}

/// A non-limit ordinal `<= bound`.
fn below_non_limit(rng: &mut impl Rng, bound: &Ordinal) -> Ordinal {
    if !bound.is_limit() && rng.gen_bool(0.5) {
        return bound.clone();
    }
    if let Some(f) = bound.fundamental(rng.gen_range(0..20)) {
        // f < bound with bound a limit, so f + 1 < bound as well
        return f.succ().expect("countable");
    }
    let c = random_ordinal(rng);
    let c = if c.is_limit() { c.succ().expect("countable") } else { c };
    if &c <= bound {
        c
    } else {
        bound.clone()
    }
}

/// Runs `count` seeded ray problems through the selector; returns failures.
pub fn chain_select_battery(seed: u64, count: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..count {
        let (family, u) = random_ray_problem(&mut rng);
        let ok = match chain_omega_wf_select(&family, &u) {
            Ok(i) => family.member(i).is_subset(&u) && (i == 0 || !family.member(i - 1).is_subset(&u)),
            Err(_) => false,
        };
        if !ok {
            failures.push(format!("case {case}: {family:?} with U = [{}, ω₁]", u.lo));
        }
    }
    failures
}

/// Families claiming to converge to ω₁ must all be rejected.
pub fn chain_rejects_omega1_claims(count: usize) -> bool {
    (0..count as u64).all(|start| {
        let fam = RayFamily::Sequence { prefix: vec![], limit: Ordinal::Omega1, start };
        matches!(chain_omega_wf_select(&fam, &ChainRay::top()), Err(Error::IllFormedFamily(_)))
    })
}

/// The first-countable base verified at `count` sampled points, ω₁ included.
pub fn chain_base_battery(seed: u64, count: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = vec![Ordinal::Omega1, Ordinal::zero(), Ordinal::omega_pow(2)];
    while points.len() < count {
        points.push(random_ordinal(&mut rng));
    }
    let mut failures = Vec::new();
    for x in points {
        let base = chain_first_countable_base(&x);
        let mut candidates = vec![ChainRay::new(Ordinal::zero()), ChainRay::top()];
        for _ in 0..6 {
            let lo = below_non_limit(&mut rng, &x);
            candidates.push(ChainRay::new(lo));
        }
        if !verify_chain_base(&base, &x, &candidates, 24) {
            failures.push(x.to_string());
        }
    }
    failures
}

/// Twenty structured candidate bases at `⊤`.
pub fn fan_candidate_battery() -> Vec<Box<dyn Fn(u64) -> FanOpen + Send + Sync>> {
    let mut out: Vec<Box<dyn Fn(u64) -> FanOpen + Send + Sync>> = Vec::new();
    out.push(Box::new(|n| FanOpen::uniform(Some(n))));
    out.push(Box::new(|_| FanOpen::uniform(Some(0))));
    for k in 1..=6u64 {
        out.push(Box::new(move |n| FanOpen::uniform(Some(n * k))));
        out.push(Box::new(move |n| FanOpen::uniform(Some(k)).with_column(n, Some(n + k))));
    }
    out.push(Box::new(|n| FanOpen::uniform(Some(n * n))));
    out.push(Box::new(|n| FanOpen::uniform(Some(1 << n.min(40)))));
    out.push(Box::new(|n| FanOpen::uniform(Some(0)).with_column(n, Some(1000))));
    out.push(Box::new(|n| (0..=n).fold(FanOpen::uniform(Some(n + 1)), |u, c| u.with_column(c, Some(c + n)))));
    out.push(Box::new(|n| FanOpen::uniform(Some(3)).with_column(n / 2, Some(n))));
    out.push(Box::new(|n| FanOpen::uniform(Some(n % 5))));
    debug_assert_eq!(out.len(), 20);
    out
}

pub fn run_check(space: &str, check: &str) -> Result<CatalogOutcome> {
    let known = checks_for(space)?;
    if !known.contains(&check) {
        return Err(Error::UnknownCheck { space: space.to_string(), check: check.to_string() });
    }
    let outcome = |verdict, status, consistent, certificate, details| CatalogOutcome {
        space: space.to_string(),
        check: check.to_string(),
        verdict,
        status,
        consistent,
        certificate,
        details,
    };
    let top = ChainRay::top();
    Ok(match (space, check) {
        ("chain-omega1-omega-scott", "top-open") => {
            let v = chain_is_omega_scott_open(&top);
            outcome(
                v,
                Status::Decided,
                v && !chain_is_scott_open(&top),
                None,
                json!({"scott-open": chain_is_scott_open(&top)}),
            )
        }
        ("chain-omega1-scott", "top-open") => {
            let v = chain_is_scott_open(&top);
            outcome(v, Status::Decided, !v, None, json!({"omega-scott-open": chain_is_omega_scott_open(&top)}))
        }
        ("chain-omega1-omega-scott", "d-space" | "sober" | "well-filtered") => {
            // sober and well-filtered spaces are d-spaces
            let cert = chain_not_dspace_certificate();
            let ok = cert.check().is_ok();
            outcome(false, Status::CertifiedFalse, ok, Some(cert), json!({"directed-set": "[0, ω₁)"}))
        }
        ("chain-omega1-scott", "d-space") => {
            // a complete lattice is a dcpo and Scott-open sets are inaccessible by directed sups
            let sample: Vec<bool> = [Ordinal::omega(), Ordinal::omega_pow(3), Ordinal::Omega1]
                .iter()
                .map(|l| !chain_is_scott_open(&ChainRay::new(l.clone())))
                .collect();
            outcome(
                true,
                Status::Decided,
                sample.iter().all(|&b| b),
                None,
                json!({"limit-rays-closed-under-sups": sample}),
            )
        }
        ("chain-omega1-omega-scott", "omega-wf") => {
            let failures = chain_select_battery(7, 500);
            let rejects = chain_rejects_omega1_claims(16);
            let details = json!({"families": 500, "selection-failures": failures, "rejects-omega1-claims": rejects,
                "scope": "decided for ray families only"});
            outcome(true, Status::AssertedWithSpotChecks, failures.is_empty() && rejects, None, details)
        }
        ("chain-omega1-omega-scott", "first-countable") => {
            let failures = chain_base_battery(11, 50);
            outcome(true, Status::Decided, failures.is_empty(), None, json!({"points": 50, "failures": failures}))
        }
        ("fan-lattice-scott", "first-countable") => {
            let cert = fan_diagonal_refuter(|n| FanOpen::uniform(Some(n)), 64)?;
            let ok = cert.check().is_ok();
            outcome(false, Status::CertifiedFalse, ok, Some(cert), json!({"test-bound": 64}))
        }
        ("fan-lattice-scott", "sober") => {
            let report = fan_sober_check();
            let samples = sample_two_column_closed(200);
            let splits_ok = samples.iter().all(|c| {
                fan_generic_point(c).is_none() && fan_split(c).is_some_and(|(a, b)| validate_fan_split(c, &a, &b))
            });
            let details = json!({"irreducible-kinds": report.irreducible_kinds, "split-samples": samples.len()});
            outcome(report.sober, Status::Decided, report.sober && splits_ok, None, details)
        }
        ("cofinite-nat", "sober") => {
            let r = cofinite::cofinite_checks();
            let ok = r.not_sober.check().is_ok();
            outcome(false, Status::CertifiedFalse, ok, Some(r.not_sober), json!({}))
        }
        ("cofinite-nat", "omega-wf") => {
            let r = cofinite::cofinite_checks();
            let ok = r.not_omega_wf.check().is_ok() && r.family_filtered;
            outcome(false, Status::CertifiedFalse, ok, Some(r.not_omega_wf), json!({"open": "∅"}))
        }
        ("cofinite-nat", "d-space") => {
            let r = cofinite::cofinite_checks();
            outcome(r.d_space, Status::Decided, r.d_space, None, json!({"directed-sets": "singletons"}))
        }
        ("cofinite-nat", "rudin") => {
            let r = cofinite::cofinite_checks();
            let v = r.whole_in_m_family && r.whole_minimal && r.whole_not_directed_closure;
            let details = json!({"whole-in-rd-omega": r.whole_in_m_family && r.whole_minimal,
                "whole-not-directed-closure": r.whole_not_directed_closure});
            outcome(v, Status::Decided, v, None, details)
        }
        _ => unreachable!("checks_for covers every pair"),
    })
}

/// Closed sets with exactly two occupied columns.
pub fn sample_two_column_closed(count: usize) -> Vec<FanClosed> {
    (0..count as u64)
        .map(|i| {
            let a = i % 11;
            let b = a + 1 + (i * 7) % 13;
            FanClosed::columns(&[(a, 1 + i % 9), (b, 1 + (i * 5) % 17)].into_iter().collect())
        })
        .collect()
}
