//! Reading and writing JSON space documents.

use std::error::Error;

use wfspace::document::{read_space, write_space};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let text = r#"{ "points": ["bot", "l", "r", "top"],
        "poset": { "leq": [["bot","l"], ["bot","r"], ["l","top"], ["r","top"]], "topology": "scott" } }"#;
    let x = read_space(text)?;
    let canonical = write_space(&x);
    print!("{canonical}");
    assert_eq!(write_space(&read_space(&canonical)?), canonical);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
