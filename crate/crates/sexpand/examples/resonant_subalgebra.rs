//! Check a resonant decomposition of so(3) against the two-element group
//! and extract the resonant subalgebra.
//!
//! so(3) splits as V0 = span{X2}, V1 = span{X0, X1} with
//! [V0,V0] in V0, [V0,V1] in V1, [V1,V1] in V0, which mirrors the product
//! of the group elements {e, g}.
//!
//! Run with: cargo run --example resonant_subalgebra

use std::collections::BTreeMap;

use sexpand::expansion::{check_resonance, resonant_subalgebra, ResonantDecomposition};
use sexpand::liecore::standard_algebra;
use sexpand::semigroups::z2;

fn main() {
    let l = standard_algebra("so3").unwrap();
    let s = z2();
    let d = ResonantDecomposition {
        g_partition: vec![vec![2], vec![0, 1]],
        s_partition: vec![vec![0], vec![1]],
        bracket_targets: BTreeMap::from([
            ((0, 0), vec![0]),
            ((0, 1), vec![1]),
            ((1, 1), vec![0]),
        ]),
    };

    let report = check_resonance(&s, &l, &d).unwrap();
    println!("resonance check ok: {}", report.ok());

    let (sub, embedding) = resonant_subalgebra(&s, &l, &d).unwrap();
    println!("resonant subalgebra: dim {} of {}", sub.dim(), l.dim() * s.order());
    println!("embedded flat indices: {embedding:?}");
    let g = sub.killing_form();
    println!("killing form:\n{g}");
    println!("inertia {}", g.exact_inertia().unwrap());
    assert!(sub.validate().ok());
    println!("Jacobi identity of the subalgebra: ok");
}
