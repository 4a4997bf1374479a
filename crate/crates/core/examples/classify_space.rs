//! Property verdicts for a few small spaces.

use std::error::Error;

use wfspace::classify::{classify, PROPERTIES};
use wfspace::topology::{poset_topology, TopologyKind};
use wfspace::{FinitePoset, FiniteSpace};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let diamond = FinitePoset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])?;
    let spaces = [
        ("sierpinski", FiniteSpace::sierpinski()),
        ("v-space", FiniteSpace::v_space()),
        ("diamond/lower", poset_topology(&diamond, TopologyKind::Lower)?),
    ];
    for (name, x) in &spaces {
        let report = classify(x)?;
        let holds: Vec<&str> = PROPERTIES.iter().copied().filter(|p| report.holds(p)).collect();
        println!("{name}: {}", holds.join(" "));
        for (property, cert) in &report.certificates {
            cert.check()?;
            println!("  not {property}: certificate re-checks");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
