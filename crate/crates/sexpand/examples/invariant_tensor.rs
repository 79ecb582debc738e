//! Push the Killing form of so(3) through a zero-reduced expansion as an
//! invariant rank-2 tensor with free constants per semigroup element, and
//! verify the bilinear axioms on seeded random rational vectors.
//!
//! Run with: cargo run --example invariant_tensor

use sexpand::expansion::{
    expand_invariant_tensor, s_expand, verify_ad_invariance,
    verify_inner_product_axioms_seeded, SymTensor, DEFAULT_SEED,
};
use sexpand::liecore::standard_algebra;
use sexpand::rat;
use sexpand::semigroups::semilattice2;

fn main() {
    let l = standard_algebra("so3").unwrap();
    let s = semilattice2();
    let base = SymTensor::from_matrix(&l.killing_form()).unwrap();

    // one free constant per non-absorbing element; the absorbing slot is unused
    let alphas = [rat(0, 1), rat(3, 2)];
    let (reduced, t) = expand_invariant_tensor(&s, &l, &base, &alphas).unwrap();
    println!("reduced algebra dim {}", reduced.dim());
    let m = t.to_matrix();
    println!("expanded tensor:\n{m}");
    println!("inertia {}", m.exact_inertia().unwrap());

    let e = s_expand(&s, &l);
    let axioms = verify_inner_product_axioms_seeded(&e, 50, DEFAULT_SEED);
    println!("\ninner product axioms: {} checks, ok = {}", axioms.checks, axioms.ok());
    let inv = verify_ad_invariance(&e);
    println!("invariance identities: {} checks, ok = {}", inv.checks, inv.ok());
}
