//! Sobrification of a three-point chain given by a subbasis. Finite T0
//! spaces are sober, so `η` comes out a homeomorphism.

use std::error::Error;
use std::sync::Arc;

use wfspace::reflection::{preservation_checks, sobrify};
use wfspace::{FiniteSpace, PointSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = Arc::new(FiniteSpace::generate(3, &[PointSet::from_indices([1, 2]), PointSet::singleton(2)])?);
    let s = sobrify(&x)?;
    println!("points {} -> {}, η homeomorphism: {}", x.len(), s.len(), s.eta.is_homeomorphism());
    let p = preservation_checks(&x)?;
    println!("preservation agrees: {} {p:?}", p.all_agree());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
