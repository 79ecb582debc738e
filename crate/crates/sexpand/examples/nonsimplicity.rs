//! Every expansion by a semigroup of order >= 2 has a proper ideal; this
//! example produces the certificate and, where possible, an explicit
//! splitting into ideal copies of the base algebra.
//!
//! Run with: cargo run --example nonsimplicity

use sexpand::liecore::standard_algebra;
use sexpand::semigroups::{semilattice2, Semigroup};
use sexpand::structure::{ideal_certificate, split_direct_sum};

fn main() {
    let l = standard_algebra("so3").unwrap();
    let z2 = sexpand::semigroups::z2();
    let null2 = Semigroup::new("null2", vec![vec![0, 0], vec![0, 0]]).unwrap();

    for s in [&z2, &semilattice2(), &null2] {
        println!("== {} x so3 ==", s.name());
        let cert = ideal_certificate(s, &l).unwrap();
        println!(
            "proper ideal of dim {} inside dim {} ({} bracket membership checks)",
            cert.dim(),
            cert.ambient,
            cert.checks
        );
        let split = split_direct_sum(s, &l);
        if split.full {
            println!("splits fully into {} ideal copies of the base:", split.parts.len());
            for part in &split.parts {
                println!("  eigenvector {:?}, scale {}", part.eigenvector, part.scale);
            }
        } else {
            println!(
                "no full split: {} usable part(s), complement dim {}",
                split.parts.len(),
                split.complement_dim
            );
        }
        println!();
    }
}
