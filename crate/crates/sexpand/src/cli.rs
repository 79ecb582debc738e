//! Command-line front end. The binary target is a thin wrapper around
//! [`run`]; everything here is library code so integration tests can drive
//! the commands directly.
//!
//! Exit codes: 0 success, 1 semantic failure (Jacobi, associativity, missing
//! zero element, failed resonance, no plan), 2 parse or I/O error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;

use crate::discovery::{self, DiscoveryOptions};
use crate::expansion::{
    self, expanded_killing_direct, s_expand, ResonantDecomposition,
};
use crate::geometry::{self, semigroup_profile, signature_profile};
use crate::json::{self, Loaded};
use crate::liecore::{standard_algebra, LieAlgebra};
use crate::report::{self, Format};
use crate::semigroups::{enumerate_semigroups, mk_matrix, standard_semigroup, Semigroup};
use crate::structure;
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "sexpand", version, about = "Exact semigroup expansion of Lie algebras")]
pub struct Cli {
    /// Seed for the randomized exact verification passes.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an algebra or semigroup JSON file.
    Validate { path: PathBuf },
    /// Expand an algebra by a semigroup; optionally reduce by the zero element.
    Expand {
        /// Semigroup: builtin name or JSON path.
        semigroup: String,
        /// Algebra: builtin name or JSON path.
        algebra: String,
        #[arg(long)]
        reduce_zero: bool,
        /// Write the resulting algebra JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Killing form, its inertia and the character of an algebra.
    Killing { algebra: String },
    /// Print the M_K matrix and profile of a semigroup.
    Mk { semigroup: String },
    /// Predict the expanded signature for an algebra/semigroup pair.
    Predict { algebra: String, semigroup: String },
    /// Find semigroups connecting a source algebra to a target profile.
    Discover {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 4)]
        p_max: usize,
        /// Enumeration cap; plans above it are printed without candidates.
        #[arg(long, default_value_t = 4)]
        order_max: usize,
        /// Keep only semigroups with strictly positive M_K diagonal.
        #[arg(long)]
        well_defined: bool,
    },
    /// Enumerate commutative semigroups of a given order.
    Enumerate {
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Check a resonant decomposition and build the resonant subalgebra.
    Resonant {
        semigroup: String,
        algebra: String,
        /// JSON file with g_partition, s_partition and targets.
        decomposition: PathBuf,
    },
    /// Produce a non-simplicity certificate and splitting verdict.
    CertifyNonsimple { semigroup: String, algebra: String },
    /// Generate a report suite: table1, signature-matrix or case-study.
    Report {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "md")]
        format: String,
        #[arg(long, default_value_t = 2)]
        max_order: usize,
    },
}

/// Resolve a builtin name or a JSON file path to an algebra.
fn resolve_algebra(spec: &str) -> Result<LieAlgebra> {
    if Path::new(spec).exists() {
        match json::load_path(Path::new(spec))? {
            Loaded::Algebra(l) => Ok(l),
            Loaded::Expanded(e) => Ok(e.algebra),
            Loaded::Semigroup(_) => {
                Err(Error::Parse(format!("{spec} holds a semigroup, not an algebra")))
            }
        }
    } else {
        standard_algebra(spec)
    }
}

fn resolve_semigroup(spec: &str) -> Result<Semigroup> {
    if Path::new(spec).exists() {
        match json::load_path(Path::new(spec))? {
            Loaded::Semigroup(s) => Ok(s),
            _ => Err(Error::Parse(format!("{spec} does not hold a semigroup"))),
        }
    } else {
        standard_semigroup(spec)
    }
}

#[derive(Deserialize)]
struct TargetJson {
    p: usize,
    q: usize,
    r: Vec<usize>,
}

#[derive(Deserialize)]
struct DecompositionJson {
    g_partition: Vec<Vec<usize>>,
    s_partition: Vec<Vec<usize>>,
    targets: Vec<TargetJson>,
}

fn load_decomposition(path: &Path) -> Result<ResonantDecomposition> {
    let text = std::fs::read_to_string(path)?;
    let j: DecompositionJson =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut bracket_targets = BTreeMap::new();
    for t in j.targets {
        bracket_targets.insert((t.p.min(t.q), t.p.max(t.q)), t.r);
    }
    Ok(ResonantDecomposition {
        g_partition: j.g_partition,
        s_partition: j.s_partition,
        bracket_targets,
    })
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::Io(_) => 2,
        _ => 1,
    }
}

/// Parse and execute; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own message; help/version are not errors
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(seed) = cli.seed {
        std::env::set_var("SEXP_SEED", seed.to_string());
    }
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Validate { path } => cmd_validate(&path),
        Command::Expand { semigroup, algebra, reduce_zero, out } => {
            cmd_expand(&semigroup, &algebra, reduce_zero, out.as_deref())
        }
        Command::Killing { algebra } => cmd_killing(&algebra),
        Command::Mk { semigroup } => cmd_mk(&semigroup),
        Command::Predict { algebra, semigroup } => cmd_predict(&algebra, &semigroup),
        Command::Discover { source, target, p_max, order_max, well_defined } => {
            cmd_discover(&source, &target, p_max, order_max, well_defined)
        }
        Command::Enumerate { order, up_to_iso } => cmd_enumerate(order, up_to_iso),
        Command::Resonant { semigroup, algebra, decomposition } => {
            cmd_resonant(&semigroup, &algebra, &decomposition)
        }
        Command::CertifyNonsimple { semigroup, algebra } => {
            cmd_certify(&semigroup, &algebra)
        }
        Command::Report { suite, format, max_order } => {
            cmd_report(&suite, &format, max_order)
        }
    }
}

fn cmd_validate(path: &Path) -> Result<()> {
    match json::load_path(path)? {
        Loaded::Algebra(l) => {
            let report = l.validate();
            match report.failure {
                None => {
                    println!("ok: algebra '{}', dim {}", l.name(), l.dim());
                    Ok(())
                }
                Some(f) => Err(Error::Invalid(format!(
                    "Jacobi identity fails at (i, j, k, r) = ({}, {}, {}, {})",
                    f.i, f.j, f.k, f.r
                ))),
            }
        }
        Loaded::Semigroup(s) => {
            println!("ok: semigroup '{}', order {}", s.name(), s.order());
            Ok(())
        }
        Loaded::Expanded(e) => {
            println!(
                "ok: expanded algebra '{}', dim {}",
                e.algebra.name(),
                e.dim()
            );
            Ok(())
        }
    }
}

fn cmd_expand(
    semigroup: &str,
    algebra: &str,
    reduce_zero: bool,
    out: Option<&Path>,
) -> Result<()> {
    let s = resolve_semigroup(semigroup)?;
    let l = resolve_algebra(algebra)?;
    let e = s_expand(&s, &l);
    let (result_json, dim, killing) = if reduce_zero {
        let r = expansion::zero_reduce(&e)?;
        let g = r.killing_form();
        (json::algebra_to_json(&r)?, r.dim(), g)
    } else {
        (json::expanded_to_json(&e)?, e.dim(), expanded_killing_direct(&e))
    };
    let inertia = killing.exact_inertia()?;
    println!("dim {dim}");
    println!("killing inertia {inertia}");
    println!("chi {}", inertia.chi());
    let text = json::to_canonical_string(&result_json);
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_killing(algebra: &str) -> Result<()> {
    let l = resolve_algebra(algebra)?;
    let g = l.killing_form();
    let inertia = g.exact_inertia()?;
    println!("{g}");
    println!("inertia {inertia}");
    println!("chi {}", inertia.chi());
    println!("class {}", geometry::classify(&l).class);
    Ok(())
}

fn cmd_mk(semigroup: &str) -> Result<()> {
    let s = resolve_semigroup(semigroup)?;
    print!("{}", s.render_table());
    let m = mk_matrix(&s);
    println!("M_K =");
    println!("{m}");
    let p = semigroup_profile(&s);
    println!("inertia {} (P = {}, H = {}, Q = {})", p.inertia, p.order, p.h(), p.q());
    Ok(())
}

fn cmd_predict(algebra: &str, semigroup: &str) -> Result<()> {
    let l = resolve_algebra(algebra)?;
    let s = resolve_semigroup(semigroup)?;
    let np = signature_profile(&l);
    let sp = semigroup_profile(&s);
    let pred = geometry::predict_expanded_signature(&np, &sp);
    println!("base inertia {}", np.inertia);
    println!("M_K inertia {}", sp.inertia);
    println!("predicted inertia {}", pred.inertia);
    println!("predicted chi {}", pred.chi);
    println!("predicted rank {}", pred.rank);
    if !pred.naive_matches {
        println!(
            "note: the additive zero-count reading gives {} and overcounts here",
            pred.naive_n_zero
        );
    }
    Ok(())
}

fn cmd_discover(
    source: &str,
    target: &str,
    p_max: usize,
    order_max: usize,
    well_defined: bool,
) -> Result<()> {
    let src_alg = resolve_algebra(source)?;
    let tgt_alg = resolve_algebra(target)?;
    let src = signature_profile(&src_alg);
    let tgt = signature_profile(&tgt_alg);
    let plans = discovery::solve_phq(&src, &tgt, p_max)?;
    if plans.is_empty() {
        return Err(Error::Invalid(format!(
            "no (P, H, Q) plan with P <= {p_max} connects these profiles"
        )));
    }
    let opts = DiscoveryOptions {
        well_defined_only: well_defined,
        order_bound: order_max,
        ..Default::default()
    };
    for plan in &plans {
        println!("plan (P, H, Q) = ({}, {}, {})", plan.p, plan.h, plan.q);
        if plan.p > order_max {
            println!("  above the enumeration cap; plan only");
            continue;
        }
        let result = discovery::find_semigroups(plan, &src_alg, &tgt, &opts)?;
        if result.candidates.is_empty() {
            println!("  no semigroup with M_K inertia {}", plan.mk_inertia());
        }
        for c in &result.candidates {
            println!(
                "  candidate '{}': M_K inertia {}, expanded inertia {}, verified = {}",
                c.semigroup.name(),
                c.mk_inertia,
                c.observed,
                c.verified
            );
            for line in c.semigroup.render_table().lines() {
                println!("    {line}");
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(order: usize, up_to_iso: bool) -> Result<()> {
    if order == 0 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    let all = enumerate_semigroups(order, up_to_iso);
    println!(
        "{} commutative semigroup{} of order {order}{}",
        all.len(),
        if all.len() == 1 { "" } else { "s" },
        if up_to_iso { " up to isomorphism" } else { "" }
    );
    for s in &all {
        println!();
        print!("{}", s.render_table());
    }
    Ok(())
}

fn cmd_resonant(semigroup: &str, algebra: &str, decomposition: &Path) -> Result<()> {
    let s = resolve_semigroup(semigroup)?;
    let l = resolve_algebra(algebra)?;
    let d = load_decomposition(decomposition)?;
    let check = expansion::check_resonance(&s, &l, &d)?;
    if !check.ok() {
        return Err(Error::ResonanceFailed(format!("{check:?}")));
    }
    let (sub, embedding) = expansion::resonant_subalgebra(&s, &l, &d)?;
    let inertia = sub.killing_form().exact_inertia()?;
    println!("resonant: ok");
    println!("subalgebra dim {} of {}", sub.dim(), l.dim() * s.order());
    println!("embedded flat indices {embedding:?}");
    println!("killing inertia {inertia}");
    Ok(())
}

fn cmd_certify(semigroup: &str, algebra: &str) -> Result<()> {
    let s = resolve_semigroup(semigroup)?;
    let l = resolve_algebra(algebra)?;
    let cert = structure::ideal_certificate(&s, &l)?;
    println!(
        "ideal of dim {} inside dim {} verified with {} bracket checks",
        cert.dim(),
        cert.ambient,
        cert.checks
    );
    let split = structure::split_direct_sum(&s, &l);
    if split.full {
        println!(
            "full split: {} ideals, each carrying the base constants (witness verified)",
            split.parts.len()
        );
    } else {
        println!(
            "no full split: {} usable part{}, complement dim {}",
            split.parts.len(),
            if split.parts.len() == 1 { "" } else { "s" },
            split.complement_dim
        );
    }
    Ok(())
}

fn cmd_report(suite: &str, format: &str, max_order: usize) -> Result<()> {
    let fmt: Format = format.parse()?;
    let text = match suite {
        "table1" => report::table1(fmt),
        "signature-matrix" => report::signature_matrix(max_order, fmt),
        "case-study" => report::case_study()?,
        other => {
            return Err(Error::Parse(format!(
                "unknown suite '{other}' (expected table1, signature-matrix or case-study)"
            )))
        }
    };
    print!("{text}");
    Ok(())
}
