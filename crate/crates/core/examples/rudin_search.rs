//! Minimal closed sets meeting every member of a family.

use std::error::Error;

use wfspace::document::format_set;
use wfspace::rudin::{rudin_search, RudinProblem};
use wfspace::{FiniteSpace, PointSet, SetFamily};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // V-space: a below b and c; the family {b,c} ⊑ {b}
    let v = FiniteSpace::v_space();
    let family = SetFamily::new(3, vec![PointSet::from_indices([1, 2]), PointSet::singleton(1)]);
    let problem = RudinProblem::new(v.clone(), family, v.full())?;
    let sol = rudin_search(&problem)?;
    for (a, irr) in sol.minimal_members.iter().zip(&sol.irreducible_flags) {
        println!("minimal {} irreducible={irr}", format_set(&v, *a));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
