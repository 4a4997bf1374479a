//! Chains extracted from countable directed streams.

use std::error::Error;

use wfspace::catalog::stream::{extract_chain, verify_chain, FanColumnStream, FiniteStream, PermutedNatStream};
use wfspace::{FinitePoset, PointSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = FinitePoset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])?;
    let mut finite = FiniteStream::new(p, PointSet::full(4), 3)?;
    let c = extract_chain(&mut finite, 8)?;
    println!("finite: {:?} ok={}", c.chain, verify_chain(&finite, &c));

    let mut column = FanColumnStream::new(2, 0);
    let c = extract_chain(&mut column, 5)?;
    println!("column: {:?}", c.chain);

    let mut nat = PermutedNatStream::new(11, 6);
    let c = extract_chain(&mut nat, 12)?;
    println!("ℕ: {:?} -> {:?} ok={}", c.elements, c.chain, verify_chain(&nat, &c));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
