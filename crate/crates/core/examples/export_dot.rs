//! DOT export of a space and of its Smyth power space.

use std::error::Error;

use wfspace::dot::{hasse_dot, name_members};
use wfspace::powerspace::smyth_space;
use wfspace::FiniteSpace;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let v = FiniteSpace::v_space();
    print!("{}", hasse_dot(&v, "V"));
    print!("{}", hasse_dot(&name_members(&v, &smyth_space(&v)?), "P_S(V)"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
