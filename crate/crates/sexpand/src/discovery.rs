//! Answering "which semigroup takes algebra A to algebra B": solve the
//! (P, H, Q) rank conditions, enumerate and filter candidate semigroups,
//! verify by direct expansion, and generate the so(n) reachability table.

use crate::expansion::{expanded_killing, s_expand};
use crate::geometry::{
    predict_expanded_signature, PredictedSignature, SemigroupProfile,
    SignatureProfile,
};
use crate::liecore::LieAlgebra;
use crate::ratlin::{InertiaSignature, RatMatrix};
use crate::semigroups::{enumerate_semigroups, mk_matrix, Semigroup};
use crate::{Error, Result};

/// A candidate expansion parameter triple: semigroup order P, required M_K
/// zero count H and negative count Q, with the signature the plan predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionPlan {
    pub p: usize,
    pub h: usize,
    pub q: usize,
    pub predicted: PredictedSignature,
}

impl ExpansionPlan {
    /// The M_K inertia every matching semigroup must have.
    pub fn mk_inertia(&self) -> InertiaSignature {
        InertiaSignature::new(self.p - self.h - self.q, self.q, self.h)
    }
}

/// All (P, H, Q) with P <= p_max satisfying the two signature equations
/// N+ = n+(P-H-Q) + n-Q and N- = n-(P-H-Q) + n+Q against the target,
/// sorted by (P, H, Q). The rank and character equations follow from these
/// and are asserted redundantly.
pub fn solve_phq(
    source: &SignatureProfile,
    target: &SignatureProfile,
    p_max: usize,
) -> Result<Vec<ExpansionPlan>> {
    if source.killing_rank() == 0 {
        return Err(Error::UnconstrainedSource);
    }
    let (np, nm) = (source.inertia.n_plus as i64, source.inertia.n_minus as i64);
    let (tp, tm) = (target.inertia.n_plus as i64, target.inertia.n_minus as i64);
    let mut plans = Vec::new();
    for p in 1..=p_max {
        for h in 0..=p {
            for q in 0..=(p - h) {
                let k = (p - h - q) as i64;
                if np * k + nm * q as i64 != tp || nm * k + np * q as i64 != tm {
                    continue;
                }
                let mk = InertiaSignature::new(p - h - q, q, h);
                let fake = SemigroupProfile { order: p, inertia: mk };
                let predicted = predict_expanded_signature(source, &fake);
                debug_assert_eq!(predicted.inertia.rank(), target.killing_rank());
                debug_assert_eq!(predicted.chi, target.chi());
                plans.push(ExpansionPlan { p, h, q, predicted });
            }
        }
    }
    Ok(plans)
}

/// Options for [`find_semigroups`].
#[derive(Clone, Copy, Debug)]
pub struct DiscoveryOptions {
    pub up_to_iso: bool,
    /// Keep only semigroups whose M_K diagonal is strictly positive, so the
    /// angle rescaling is well defined for every element.
    pub well_defined_only: bool,
    /// Hard cap on the enumeration order.
    pub order_bound: usize,
}

impl Default for DiscoveryOptions {
    fn default() -> Self {
        Self { up_to_iso: true, well_defined_only: false, order_bound: 5 }
    }
}

/// One candidate semigroup with its verification outcome.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub semigroup: Semigroup,
    pub mk_inertia: InertiaSignature,
    /// Exact inertia of the actually-built expanded Killing form.
    pub observed: InertiaSignature,
    /// True iff `observed` equals the full target inertia triple.
    pub verified: bool,
}

#[derive(Clone, Debug)]
pub struct DiscoveryResult {
    pub plan: ExpansionPlan,
    pub candidates: Vec<Candidate>,
}

/// Enumerate semigroups of the plan's order, keep those whose M_K inertia
/// matches the plan, expand the source by each and compare the exact
/// expanded Killing inertia with the target. M_K inertia alone never marks
/// a candidate verified.
pub fn find_semigroups(
    plan: &ExpansionPlan,
    source: &LieAlgebra,
    target: &SignatureProfile,
    opts: &DiscoveryOptions,
) -> Result<DiscoveryResult> {
    if plan.p > opts.order_bound {
        return Err(Error::PlanOutOfBounds(plan.p, opts.order_bound));
    }
    let want = plan.mk_inertia();
    let mut candidates = Vec::new();
    for s in enumerate_semigroups(plan.p, opts.up_to_iso) {
        let mk = mk_matrix(&s);
        if opts.well_defined_only && (0..plan.p).any(|i| mk.get(i, i) == &crate::rint(0)) {
            continue;
        }
        let mk_inertia = mk.exact_inertia().expect("M_K is symmetric");
        if mk_inertia != want {
            continue;
        }
        let e = s_expand(&s, source);
        let observed = expanded_killing(&e).exact_inertia().expect("Killing is symmetric");
        let verified = observed == target.inertia;
        candidates.push(Candidate { semigroup: s, mk_inertia, observed, verified });
    }
    Ok(DiscoveryResult { plan: *plan, candidates })
}

/// True iff the basis change `a` carries the constants of `l1` exactly onto
/// those of `l2` (columns of `a` are the new basis in `l1` coordinates).
pub fn verify_isomorphism(l1: &LieAlgebra, l2: &LieAlgebra, a: &RatMatrix) -> Result<bool> {
    if l1.dim() != l2.dim() {
        return Err(Error::DimensionMismatch(format!(
            "dims {} and {}",
            l1.dim(),
            l2.dim()
        )));
    }
    let moved = l1.change_of_basis(a)?;
    let n = l1.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                if moved.structure_constant(i, j, k) != l2.structure_constant(i, j, k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// One row of the so(n) reachability table: so(n) expands to so(m) with a
/// semigroup of order p and H = Q = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub h: usize,
    pub q: usize,
}

fn so_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Rows (n, m, P, 0, 0) with dim so(m) = P * dim so(n), for each source n
/// scanned up to its target cap and P <= p_max. Rows are computed from the
/// divisibility condition, never hard-coded.
pub fn generate_table_one(sources: &[(usize, usize)], p_max: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for &(n, m_max) in sources {
        for m in (n + 1)..=m_max {
            let (dn, dm) = (so_dim(n), so_dim(m));
            if dm % dn == 0 && dm / dn <= p_max {
                rows.push(TableRow { n, m, p: dm / dn, h: 0, q: 0 });
            }
        }
    }
    rows
}

/// The standard 16-row survey of so(n) reachability for sources 3..6:
/// scan extents chosen per source so the table is complete within them.
pub fn standard_table_rows() -> Vec<TableRow> {
    generate_table_one(&[(3, 12), (4, 16), (5, 21), (6, 16)], 22)
}
