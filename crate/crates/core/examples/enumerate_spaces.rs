//! Counting labeled T0 spaces and running the invariant battery on them.

use std::error::Error;
use std::sync::Arc;

use wfspace::battery::finite_battery;
use wfspace::enumerate::{all_posets, all_t0_spaces, random_spaces};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 1..=4 {
        println!("n={n}: {} posets, {} T0 topologies", all_posets(n)?.len(), all_t0_spaces(n)?.len());
    }
    let mut failures = 0;
    for x in random_spaces(7, 4, 200) {
        failures += finite_battery(&Arc::new(x))?.iter().filter(|(_, ok)| !ok).count();
    }
    println!("battery failures over 200 random spaces: {failures}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
