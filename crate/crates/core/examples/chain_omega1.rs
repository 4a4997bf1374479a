//! The chain [0, ω₁] under the Scott and ω-Scott topologies.

use std::error::Error;

use wfspace::catalog::chain::{
    chain_first_countable_base, chain_is_omega_scott_open, chain_is_scott_open, chain_not_dspace_certificate,
    chain_omega_wf_select, ChainRay, RayFamily,
};
use wfspace::catalog::ordinal::Ordinal;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let top = ChainRay::top();
    println!("{{ω₁}} Scott-open: {}, ω-Scott-open: {}", chain_is_scott_open(&top), chain_is_omega_scott_open(&top));

    let cert = chain_not_dspace_certificate();
    cert.check()?;
    println!("not a d-space: certificate re-checks");

    // [ω·2[n], ω₁] descends to [ω·2, ω₁] ⊆ [ω+5, ω₁]
    let limit: Ordinal = "w*2".parse()?;
    let family = RayFamily::Sequence { prefix: vec![], limit, start: 0 };
    let u = ChainRay::new("w+5".parse()?);
    println!("member inside U: index {}", chain_omega_wf_select(&family, &u)?);

    let bad = RayFamily::Sequence { prefix: vec![], limit: Ordinal::Omega1, start: 0 };
    println!("sequence with sup ω₁: {}", chain_omega_wf_select(&bad, &u).unwrap_err());

    let x: Ordinal = "w^2".parse()?;
    println!("base at {x}: {:?}", chain_first_countable_base(&x));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
