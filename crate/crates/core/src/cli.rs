//! The `workbench` command line.
//!
//! Every subcommand prints a [`RunReport`] as JSON on stdout. Exit status
//! is 0 when every check passes, 1 when one fails and 2 on usage, parse or
//! cap errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::battery::{finite_battery, BATTERY};
use crate::caps;
use crate::catalog::{self, checks_for, run_check};
use crate::certificate::Certificate;
use crate::classify::{classify, omega_d_conditions, smyth_transfer_conditions, FilterMode};
use crate::document::{format_set, parse_family, parse_set, read_space, write_space, SpaceDocument};
use crate::dot::{hasse_dot, name_members};
use crate::enumerate::random_space;
use crate::error::{Error, Result};
use crate::powerspace::{eta, hoare_space, smyth_space, xi, IndexedSpace};
use crate::product::{product_sweep, ProductSpace};
use crate::reflection::{product_reflection_check, reflect_omega, reflection_lemmas, sobrify, Reflection};
use crate::report::RunReport;
use crate::rudin::{product_rudin_checks, rudin_search, sobriety_characterizations, FamilyChain, RudinProblem};
use crate::space::{FiniteSpace, SetFamily};
use crate::topology::{irreducible_sets, SUBSET_WALK_CAP};

#[derive(Parser, Debug)]
#[command(name = "workbench", version, about = "Finite-space and catalog topology workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PowerKind {
    Smyth,
    Hoare,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DotTarget {
    Space,
    Smyth,
    Hoare,
    Reflection,
    Sobrification,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Property verdicts with certificates for every refuted property.
    Classify { file: PathBuf },
    /// Smyth or Hoare power space.
    Power { kind: PowerKind, file: PathBuf },
    /// The ω-well-filtered reflection P_H(WD_ω(X)).
    Reflect { file: PathBuf },
    /// The sobrification P_H(Irr_c(X)).
    Sobrify { file: PathBuf },
    /// Minimal closed subsets of C meeting every member of the family.
    Rudin {
        file: PathBuf,
        /// Members separated by `;`, points by `,`, e.g. `a,b;c`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        closed: String,
    },
    /// Product of the given spaces.
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Run the closure, irreducibility, Rudin and reflection product checks.
        #[arg(long)]
        check: bool,
    },
    /// Decision procedures on the symbolic catalog; all checks when none is named.
    Catalog { name: String, check: Option<String> },
    /// Seeded random spaces through the invariant battery.
    Fuzz {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-checks every certificate in a report (or a single certificate).
    Verify { report: PathBuf },
    /// Hasse diagram in DOT format.
    ExportDot {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long = "of", value_enum, default_value_t = DotTarget::Space)]
        of: DotTarget,
    },
}

fn load(path: &Path) -> Result<Arc<FiniteSpace>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    caps::ensure("input points", SpaceDocument::parse(&text)?.points.len(), caps::core_cap())?;
    Ok(Arc::new(read_space(&text)?))
}

fn family_json(x: &FiniteSpace, f: &SetFamily) -> serde_json::Value {
    json!(f.iter().map(|a| format_set(x, a)).collect::<Vec<_>>())
}

fn space_json(x: &FiniteSpace) -> serde_json::Value {
    serde_json::from_str(&write_space(x)).expect("documents are JSON")
}

fn cmd_classify(x: &Arc<FiniteSpace>, r: &mut RunReport) -> Result<()> {
    let report = classify(x)?;
    for (k, &v) in &report.verdicts {
        r.verdict(k.clone(), v);
    }
    for (k, c) in report.certificates {
        r.check(format!("certificate/{k}"), c.check().is_ok());
        r.certificate(k, c);
    }
    let chain = FamilyChain::compute(x)?;
    r.check("family-chain-inclusions", chain.inclusions_hold());
    r.check("omega-d-conditions-agree", omega_d_conditions(x)?.agree());
    let sob = sobriety_characterizations(x)?;
    r.check("sobriety-characterizations-agree", sob.iter().all(|&b| b == sob[0]));
    r.details = json!({
        "points": x.len(),
        "opens": x.opens().len(),
        "families": {
            "S_c": family_json(x, &chain.sc),
            "D_c^omega": family_json(x, &chain.dc_omega),
            "RD_omega": family_json(x, &chain.rd_omega),
            "WD_omega": family_json(x, &chain.wd_omega),
            "Irr_c": family_json(x, &chain.irr_c),
        },
    });
    Ok(())
}

fn indexed_json(x: &FiniteSpace, ps: &IndexedSpace) -> serde_json::Value {
    let named = name_members(x, ps);
    json!({
        "points": ps.elems.iter().map(|&e| format_set(x, e)).collect::<Vec<_>>(),
        "space": space_json(&named),
    })
}

fn classify_if_small(y: &FiniteSpace, r: &mut RunReport, prefix: &str) -> Result<()> {
    if y.len() > caps::core_cap() {
        r.details["classification"] = json!(format!("skipped: {} points exceed the cap {}", y.len(), caps::core_cap()));
        return Ok(());
    }
    for (k, v) in classify(y)?.verdicts {
        r.verdict(format!("{prefix}{k}"), v);
    }
    Ok(())
}

fn cmd_power(x: &Arc<FiniteSpace>, kind: PowerKind, r: &mut RunReport) -> Result<()> {
    let ps = match kind {
        PowerKind::Smyth => smyth_space(x)?,
        PowerKind::Hoare => hoare_space(x, &irreducible_sets(x))?,
    };
    r.details = indexed_json(x, &ps);
    match kind {
        PowerKind::Smyth => {
            r.check("xi-embedding", xi(x, &ps)?.is_embedding());
            if x.len() <= caps::SMYTH_TRANSFER_CAP {
                let t = smyth_transfer_conditions(x, FilterMode::LeastMember)?;
                r.verdict("base/omega-well-filtered", t.base_omega_wf);
                r.verdict("smyth/omega-d-space", t.smyth_omega_d);
                r.check("smyth-omega-wf-transfer", t.agree());
            }
        }
        PowerKind::Hoare => {
            r.check("eta-embedding", eta(x, &ps)?.is_embedding());
        }
    }
    classify_if_small(&ps.space, r, "power/")
}

fn reflection_details(x: &FiniteSpace, refl: &Reflection) -> serde_json::Value {
    let mut v = indexed_json(x, &refl.space);
    v["eta"] = json!(refl.eta.table().iter().map(|&i| format_set(x, refl.space.elems[i])).collect::<Vec<_>>());
    v
}

fn cmd_reflect(x: &Arc<FiniteSpace>, sober: bool, r: &mut RunReport) -> Result<()> {
    let refl = if sober { sobrify(x)? } else { reflect_omega(x)? };
    r.verdict("eta-homeomorphism", refl.eta.is_homeomorphism());
    r.check("eta-embedding", refl.eta.is_embedding());
    if sober {
        r.check("sobrification-sober", crate::topology::sober_check(&refl.target).sober);
    } else {
        r.check(
            "reflection-omega-well-filtered",
            crate::classify::filtered_refutation(&refl.target, FilterMode::LeastMember)?.is_none(),
        );
        if x.len() <= SUBSET_WALK_CAP {
            let lemmas = reflection_lemmas(x)?;
            r.check("reflection-lemmas", lemmas.all_pass());
            r.details = json!({ "lemmas": lemmas });
        }
    }
    let d = reflection_details(x, &refl);
    if r.details.is_null() {
        r.details = d;
    } else {
        r.details["reflection"] = d;
    }
    Ok(())
}

fn cmd_rudin(x: &Arc<FiniteSpace>, family: &str, closed: &str, r: &mut RunReport) -> Result<()> {
    let members = parse_family(x, family)?;
    let c = parse_set(x, closed)?;
    let problem = RudinProblem::new((**x).clone(), SetFamily::new(x.len(), members), c)?;
    let sol = rudin_search(&problem)?;
    r.check("has-irreducible-member", sol.has_irreducible());
    r.details = json!({
        "minimal": sol.minimal_members.iter().zip(&sol.irreducible_flags)
            .map(|(&a, &irr)| json!({ "set": format_set(x, a), "irreducible": irr }))
            .collect::<Vec<_>>(),
    });
    Ok(())
}

fn cmd_product(xs: Vec<Arc<FiniteSpace>>, check: bool, r: &mut RunReport) -> Result<()> {
    let p = ProductSpace::new(xs.clone())?;
    let names: Vec<String> = (0..p.space.len())
        .map(|q| {
            let coords = p.coords(q);
            let parts: Vec<String> = coords.iter().enumerate().map(|(i, &c)| p.factors[i].name(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let named = (*p.space).clone().with_names(names)?;
    r.details = json!({ "space": space_json(&named) });
    if check {
        let sweep = product_sweep(&p)?;
        r.check("closure-and-box-lemmas", sweep.all_pass());
        let rudin = product_rudin_checks(&xs)?;
        r.check("rudin-projections", rudin.all_pass());
        let refl = product_reflection_check(&xs)?;
        r.check("reflection-commutes", refl.gamma_homeomorphism);
        r.check("omega-wf-agrees", refl.omega_wf_agrees);
        r.details["sweep"] = json!({
            "subsets": sweep.subsets_checked,
            "closure_checks": sweep.closure_checks,
            "box_checks": sweep.box_checks,
            "irreducible_closed": sweep.irreducible_closed,
        });
    }
    classify_if_small(&p.space, r, "")
}

fn cmd_catalog(name: &str, check: Option<&str>, r: &mut RunReport) -> Result<()> {
    let checks: Vec<&str> = match check {
        Some(c) => vec![c],
        None => checks_for(name)?.to_vec(),
    };
    let mut details = BTreeMap::new();
    for c in checks {
        let out = run_check(name, c)?;
        r.verdict(c, out.verdict);
        r.check(format!("{c}/consistent"), out.consistent);
        if let Some(cert) = out.certificate.clone() {
            r.check(format!("{c}/certificate"), cert.check().is_ok());
            r.certificate(c, cert);
        }
        details.insert(c.to_string(), json!({ "status": out.status, "details": out.details }));
    }
    r.details = json!({ "space": name, "checks": details });
    Ok(())
}

/// Case `i` draws from its own ChaCha stream, so results do not depend on
/// how cases are scheduled.
pub fn fuzz_case(seed: u64, n: usize, i: usize) -> FiniteSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    random_space(&mut rng, n)
}

type FuzzResult = (usize, FiniteSpace, Vec<(&'static str, bool)>);

fn cmd_fuzz(n: usize, cases: usize, seed: u64, r: &mut RunReport) -> Result<()> {
    caps::ensure("fuzz points", n, caps::core_cap())?;
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let mut results: Vec<FuzzResult> = (0..cases)
        .into_par_iter()
        .map(|i| {
            let x = Arc::new(fuzz_case(seed, n, i));
            finite_battery(&x).map(|b| (i, (*x).clone(), b))
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(i, _, _)| *i);
    let mut failures = Vec::new();
    let mut passed = BTreeMap::new();
    for (i, x, battery) in &results {
        for &(name, ok) in battery {
            *passed.entry(name).or_insert(0usize) += ok as usize;
            if !ok {
                failures.push(json!({ "case": i, "check": name, "space": space_json(x) }));
            }
        }
    }
    for name in BATTERY {
        r.check(format!("battery/{name}"), passed.get(name).copied().unwrap_or(0) == cases);
    }
    let mut distinct: Vec<String> = results.iter().map(|(_, x, _)| write_space(x)).collect();
    distinct.sort();
    distinct.dedup();
    r.details = json!({
        "n": n,
        "cases": cases,
        "seed": seed,
        "distinct_spaces": distinct.len(),
        "passed": passed,
        "failures": failures,
    });
    Ok(())
}

fn cmd_verify(path: &Path, r: &mut RunReport) -> Result<()> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let certs: BTreeMap<String, Certificate> = match RunReport::parse(&text) {
        Ok(report) => report.certificates,
        Err(report_err) => match serde_json::from_str::<Certificate>(&text) {
            Ok(c) => BTreeMap::from([("certificate".to_string(), c)]),
            Err(_) => return Err(report_err),
        },
    };
    let mut rejected = BTreeMap::new();
    for (name, c) in &certs {
        let outcome = c.check();
        r.check(format!("certificate/{name}"), outcome.is_ok());
        if let Err(e) = outcome {
            rejected.insert(name.clone(), e.to_string());
        }
    }
    r.details = json!({ "certificates": certs.len(), "rejected": rejected });
    Ok(())
}

fn cmd_export_dot(x: &Arc<FiniteSpace>, output: &Path, of: DotTarget, r: &mut RunReport) -> Result<()> {
    let (y, title) = match of {
        DotTarget::Space => ((**x).clone(), "space"),
        DotTarget::Smyth => (name_members(x, &smyth_space(x)?), "smyth"),
        DotTarget::Hoare => (name_members(x, &hoare_space(x, &irreducible_sets(x))?), "hoare"),
        DotTarget::Reflection => (name_members(x, &reflect_omega(x)?.space), "reflection"),
        DotTarget::Sobrification => (name_members(x, &sobrify(x)?.space), "sobrification"),
    };
    let dot = hasse_dot(&y, title);
    std::fs::write(output, &dot).map_err(|e| Error::Parse(format!("{}: {e}", output.display())))?;
    r.details = json!({
        "output": output.display().to_string(),
        "nodes": y.len(),
        "edges": y.specialization_order().covers().len(),
    });
    Ok(())
}

fn dispatch(cmd: Command, r: &mut RunReport) -> Result<()> {
    match cmd {
        Command::Classify { file } => cmd_classify(&load(&file)?, r),
        Command::Power { kind, file } => cmd_power(&load(&file)?, kind, r),
        Command::Reflect { file } => cmd_reflect(&load(&file)?, false, r),
        Command::Sobrify { file } => cmd_reflect(&load(&file)?, true, r),
        Command::Rudin { file, family, closed } => cmd_rudin(&load(&file)?, &family, &closed, r),
        Command::Product { files, check } => {
            let xs = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            cmd_product(xs, check, r)
        }
        Command::Catalog { name, check } => {
            if !catalog::CATALOG_SPACES.contains(&name.as_str()) {
                return Err(Error::UnknownCatalogSpace(name));
            }
            cmd_catalog(&name, check.as_deref(), r)
        }
        Command::Fuzz { n, cases, seed } => cmd_fuzz(n, cases, seed, r),
        Command::Verify { report } => cmd_verify(&report, r),
        Command::ExportDot { file, output, of } => cmd_export_dot(&load(&file)?, &output, of, r),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let command = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut report = RunReport::new(command);
    let start = Instant::now();
    if let Err(e) = dispatch(cli.command, &mut report) {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    report.timing.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let _ = out.write_all(report.to_json().as_bytes());
    let failed = report.failed_checks();
    if failed.is_empty() {
        0
    } else {
        let _ = writeln!(err, "failed checks: {}", failed.join(", "));
        1
    }
}
