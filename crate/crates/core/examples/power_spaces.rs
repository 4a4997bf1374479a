//! Smyth and Hoare power spaces of the V-space.

use std::error::Error;
use std::sync::Arc;

use wfspace::document::format_set;
use wfspace::powerspace::{hoare_space, smyth_space, union_map_check, xi};
use wfspace::topology::irreducible_sets;
use wfspace::FiniteSpace;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let v = Arc::new(FiniteSpace::v_space());
    let ps = smyth_space(&v)?;
    let members: Vec<String> = ps.elems.iter().map(|&k| format_set(&v, k)).collect();
    println!("K(V) = {}", members.join(" "));
    println!("ξ is an embedding: {}", xi(&v, &ps)?.is_embedding());

    let ph = hoare_space(&v, &irreducible_sets(&v))?;
    let members: Vec<String> = ph.elems.iter().map(|&a| format_set(&v, a)).collect();
    println!("Irr_c(V) = {}", members.join(" "));

    let s = FiniteSpace::sierpinski();
    let u = union_map_check(&s)?;
    println!("union map on P_S(P_S(S)): {u:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
