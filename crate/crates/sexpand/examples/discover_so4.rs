//! Search for semigroups whose expansion carries so(3) onto the signature
//! profile of so(4), and verify each candidate by explicit expansion.
//!
//! Run with: cargo run --example discover_so4

use sexpand::discovery::{find_semigroups, solve_phq, DiscoveryOptions};
use sexpand::geometry::signature_profile;
use sexpand::liecore::standard_algebra;

fn main() {
    let source = standard_algebra("so3").unwrap();
    let target = standard_algebra("so4").unwrap();
    let src = signature_profile(&source);
    let tgt = signature_profile(&target);

    println!("source so3: dim {} inertia {}", src.dim, src.inertia);
    println!("target so4: dim {} inertia {}\n", tgt.dim, tgt.inertia);

    let plans = solve_phq(&src, &tgt, 4).unwrap();
    let opts = DiscoveryOptions::default();
    for plan in &plans {
        println!(
            "plan (P, H, Q) = ({}, {}, {}), required M_K inertia {}",
            plan.p, plan.h, plan.q, plan.mk_inertia()
        );
        let result = find_semigroups(plan, &source, &tgt, &opts).unwrap();
        if result.candidates.is_empty() {
            println!("  no candidates\n");
            continue;
        }
        for c in &result.candidates {
            println!(
                "  {} -> expanded inertia {}, verified = {}",
                c.semigroup.name(),
                c.observed,
                c.verified
            );
            for line in c.semigroup.render_table().lines() {
                println!("    {line}");
            }
        }
        println!();
    }
}
