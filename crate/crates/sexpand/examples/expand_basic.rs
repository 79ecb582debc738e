//! Expand so(3) by the two-element cyclic group and inspect the result.
//!
//! Run with: cargo run --example expand_basic

use sexpand::expansion::{expanded_killing_direct, s_expand};
use sexpand::liecore::standard_algebra;
use sexpand::semigroups::z2;

fn main() {
    let l = standard_algebra("so3").unwrap();
    let s = z2();
    let e = s_expand(&s, &l);

    println!("base:      {} (dim {})", l.name(), l.dim());
    println!("semigroup: {} (order {})", s.name(), s.order());
    println!("expanded:  dim {}\n", e.dim());

    println!("nonzero brackets of the expansion:");
    for (i, j, terms) in e.algebra.stored_brackets() {
        let (a, alpha) = e.unflat(i);
        let (b, beta) = e.unflat(j);
        let rhs: Vec<String> = terms
            .iter()
            .map(|(k, c)| {
                let (r, gamma) = e.unflat(*k);
                format!("{c} (T{r}, s{gamma})")
            })
            .collect();
        println!("  [(T{a}, s{alpha}), (T{b}, s{beta})] = {}", rhs.join(" + "));
    }

    let g = expanded_killing_direct(&e);
    println!("\nexpanded Killing form:\n{g}");
    println!("inertia {}", g.exact_inertia().unwrap());
}
