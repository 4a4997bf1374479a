//! Closure, irreducibility and reflection through finite products.

use std::error::Error;
use std::sync::Arc;

use wfspace::product::product_sweep;
use wfspace::reflection::product_reflection_check;
use wfspace::rudin::product_rudin_checks;
use wfspace::{FiniteSpace, ProductSpace};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s = Arc::new(FiniteSpace::sierpinski());
    let v = Arc::new(FiniteSpace::v_space());
    let p = ProductSpace::new(vec![s.clone(), v.clone()])?;
    let sweep = product_sweep(&p)?;
    println!(
        "S×V: {} subsets, {} irreducible closed, pass={}",
        sweep.subsets_checked,
        sweep.irreducible_closed,
        sweep.all_pass()
    );
    println!("rudin: {:?}", product_rudin_checks(&[s.clone(), v.clone()])?);
    println!("reflection: {:?}", product_reflection_check(&[s, v])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
