//! Predict the inertia of every expansion of the builtin algebras by every
//! commutative semigroup of order <= 3, then rebuild each Killing form from
//! the expanded structure constants and compare. Everything is exact.
//!
//! Run with: cargo run --release --example signature_theorem

use sexpand::expansion::{expanded_killing_direct, s_expand};
use sexpand::geometry::{predict_expanded_signature, semigroup_profile, signature_profile};
use sexpand::liecore::standard_algebra;
use sexpand::semigroups::enumerate_semigroups;

fn main() {
    let algebras = ["so3", "so4", "sl2", "heisenberg3", "abelian2", "sl2+so3"];
    let mut cases = 0;
    for name in algebras {
        let l = standard_algebra(name).unwrap();
        let np = signature_profile(&l);
        for p in 1..=3 {
            for s in enumerate_semigroups(p, false) {
                let pred = predict_expanded_signature(&np, &semigroup_profile(&s));
                let e = s_expand(&s, &l);
                let got = expanded_killing_direct(&e).exact_inertia().unwrap();
                assert_eq!(got, pred.inertia, "{name} by {:?}", s.table());
                cases += 1;
            }
        }
        println!("{name:<12} base inertia {}: all order <= 3 expansions match", np.inertia);
    }
    println!("\n{cases} predictions confirmed against directly computed Killing forms");
}
