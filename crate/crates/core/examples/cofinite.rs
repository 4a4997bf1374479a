//! The cofinite topology on ℕ: an ω-Rudin set that is not a directed closure.

use std::error::Error;

use wfspace::catalog::cofinite::cofinite_checks;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = cofinite_checks();
    r.not_sober.check()?;
    r.not_omega_wf.check()?;
    println!("ℕ ∈ M(𝒦): {}, minimal: {}, filtered: {}", r.whole_in_m_family, r.whole_minimal, r.family_filtered);
    println!("ℕ not a directed closure: {}, d-space: {}", r.whole_not_directed_closure, r.d_space);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
