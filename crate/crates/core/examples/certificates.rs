//! Serializing a certificate and re-checking it from JSON.

use std::error::Error;

use wfspace::catalog::run_check;
use wfspace::certificate::Certificate;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let outcome = run_check("fan-lattice-scott", "first-countable")?;
    let cert = outcome.certificate.ok_or("a refuted check carries a certificate")?;
    let json = serde_json::to_string(&cert)?;
    let back: Certificate = serde_json::from_str(&json)?;
    back.check()?;
    println!("{:?} certificate, {} bytes, re-checks", back.kind(), json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
