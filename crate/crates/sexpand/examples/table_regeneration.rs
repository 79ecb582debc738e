//! Regenerate the reachability table and the worked order-2 case study.
//!
//! Run with: cargo run --example table_regeneration

use sexpand::report::{case_study, table1, Format};

fn main() {
    println!("{}", table1(Format::Md));
    println!("{}", case_study().unwrap());
}
