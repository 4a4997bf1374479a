//! The ω-well-filtered reflection and its universal property.

use std::error::Error;
use std::sync::Arc;

use wfspace::reflection::{all_extensions, extend_map, reflect_omega, reflection_lemmas};
use wfspace::{ContinuousMap, FiniteSpace};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let v = Arc::new(FiniteSpace::v_space());
    let r = reflect_omega(&v)?;
    println!("|X^ω-w| = {}, η homeomorphism: {}", r.len(), r.eta.is_homeomorphism());
    println!("lemmas: {:?}", reflection_lemmas(&v)?);

    let s = Arc::new(FiniteSpace::sierpinski());
    let f = ContinuousMap::new(v.clone(), s, vec![0, 1, 1])?;
    let ext = extend_map(&f, &r)?;
    println!("f* = {:?}, extensions found by enumeration: {}", ext.table(), all_extensions(&f, &r)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
