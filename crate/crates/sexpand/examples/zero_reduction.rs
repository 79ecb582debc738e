//! Expand so(3) by the order-2 semilattice and reduce by its absorbing
//! element: the generators paired with the zero are quotiented away.
//!
//! Run with: cargo run --example zero_reduction

use sexpand::expansion::{s_expand, zero_reduce};
use sexpand::liecore::standard_algebra;
use sexpand::semigroups::{semilattice2, zero_element};

fn main() {
    let l = standard_algebra("so3").unwrap();
    let s = semilattice2();
    println!("semigroup table:\n{}", s.render_table());
    println!("absorbing element: index {}", zero_element(&s).unwrap());

    let e = s_expand(&s, &l);
    println!("\nexpanded dim {}", e.dim());

    let r = zero_reduce(&e).unwrap();
    println!("reduced dim {}", r.dim());
    let g = r.killing_form();
    println!("reduced Killing form:\n{g}");
    println!("inertia {}", g.exact_inertia().unwrap());
    assert!(r.validate().ok());
    println!("Jacobi identity of the reduction: ok");
}
