//! The fan lattice {⊥} ∪ ℕ×ℕ ∪ {⊤}: sober but not first countable.

use std::collections::BTreeMap;
use std::error::Error;

use wfspace::catalog::fan::{fan_diagonal_refuter, fan_sober_check, fan_split, FanClosed, FanOpen};
use wfspace::certificate::Certificate;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // candidate base U_n: every column from height n
    let cert = fan_diagonal_refuter(|n| FanOpen::uniform(Some(n)), 8)?;
    cert.check()?;
    if let Certificate::FanNotFirstCountable { witnesses, .. } = &cert {
        println!("witnesses (n, m_n): {witnesses:?}");
    }
    let report = fan_sober_check();
    println!("sober: {} {:?}", report.sober, report.irreducible_kinds);

    let c = FanClosed::columns(&BTreeMap::from([(1, 3), (2, 5)]));
    let (f1, f2) = fan_split(&c).ok_or("two columns split")?;
    println!("split: columns {:?} and {:?}", (f1.height(1), f1.height(2)), (f2.height(1), f2.height(2)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
