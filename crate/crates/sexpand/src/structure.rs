//! Structural consequences of expansion: the regular representation of the
//! semigroup, rank analysis of its matrix forms, constructive non-simplicity
//! certificates, and direct-sum splitting of expansions.

use itertools::Itertools;
use num_traits::Zero;

use crate::expansion::s_expand;
use crate::liecore::LieAlgebra;
use crate::ratlin::{rint, Rat, RatMatrix, Subspace};
use crate::semigroups::Semigroup;
use crate::{Error, Result};

/// The multiplication operators of a semigroup: `M[alpha]` has a 1 in row
/// `alpha * gamma`, column `gamma`. Columns sum to 1 by selector uniqueness
/// and the operators commute pairwise.
#[derive(Clone, Debug)]
pub struct RegularRepresentation {
    pub operators: Vec<RatMatrix>,
    /// Whether distinct elements map to distinct operators.
    pub faithful: bool,
}

pub fn regular_representation(s: &Semigroup) -> RegularRepresentation {
    let p = s.order();
    let operators: Vec<RatMatrix> = (0..p)
        .map(|alpha| {
            let mut m = RatMatrix::zeros(p, p);
            for gamma in 0..p {
                m.set(s.mul(alpha, gamma), gamma, rint(1));
            }
            m
        })
        .collect();
    let faithful = (0..p)
        .tuple_combinations()
        .all(|(a, b)| operators[a] != operators[b]);
    RegularRepresentation { operators, faithful }
}

/// Rank data for the two matrix readings of a semigroup: the table as an
/// integer matrix (1-based entry values) and the stacked operator family.
#[derive(Clone, Copy, Debug)]
pub struct MfRankReport {
    pub order: usize,
    pub table_rank: usize,
    pub stacked_rank: usize,
    /// Whether the table matrix has full rank P.
    pub full_rank_claim_holds: bool,
}

pub fn mf_rank_analysis(s: &Semigroup) -> MfRankReport {
    let p = s.order();
    let table = RatMatrix::from_rows(
        s.table()
            .iter()
            .map(|row| row.iter().map(|&v| rint(v as i64 + 1)).collect())
            .collect(),
    );
    let reg = regular_representation(s);
    let mut stacked = RatMatrix::zeros(p * p, p);
    for (a, m) in reg.operators.iter().enumerate() {
        for i in 0..p {
            for j in 0..p {
                stacked.set(a * p + i, j, m.get(i, j).clone());
            }
        }
    }
    let table_rank = table.rational_rank();
    MfRankReport {
        order: p,
        table_rank,
        stacked_rank: stacked.rational_rank(),
        full_rank_claim_holds: table_rank == p,
    }
}

/// An explicitly verified proper nonzero ideal of an expansion, witnessing
/// non-simplicity.
#[derive(Clone, Debug)]
pub struct IdealCertificate {
    pub ambient: usize,
    pub basis: Vec<Vec<Rat>>,
    /// Number of bracket-closure checks performed during verification.
    pub checks: usize,
}

impl IdealCertificate {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Bracket of two coordinate vectors in an algebra.
fn vec_bracket(l: &LieAlgebra, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let n = l.dim();
    let mut out = vec![Rat::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            for (k, c) in l.bracket(i, j) {
                out[k] += &x[i] * &y[j] * c;
            }
        }
    }
    out
}

fn verify_ideal(l: &LieAlgebra, basis: &[Vec<Rat>]) -> Result<usize> {
    let n = l.dim();
    let span = Subspace::span(n, basis);
    if span.dim() != basis.len() || span.dim() == 0 || span.dim() >= n {
        return Err(Error::Invalid(format!(
            "certificate basis spans dim {} inside dim {n}",
            span.dim()
        )));
    }
    let mut checks = 0;
    for g in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[g] = rint(1);
        for w in basis {
            let br = vec_bracket(l, &e, w);
            checks += 1;
            if !span.contains(&br) {
                return Err(Error::Invalid(format!(
                    "bracket of generator {g} with a basis vector leaves the subspace"
                )));
            }
        }
    }
    Ok(checks)
}

/// Produce a verified proper nonzero ideal of the expansion of `l` by `s`.
///
/// For order P >= 2 the zero-sum hyperplane of the semigroup coordinates,
/// tensored with the whole base algebra, is invariant under every
/// multiplication operator (columns sum to 1), giving an ideal of dimension
/// (P-1)*N. For P = 1 only an abelian base of dim >= 2 admits a certificate.
pub fn ideal_certificate(s: &Semigroup, l: &LieAlgebra) -> Result<IdealCertificate> {
    let p = s.order();
    let n = l.dim();
    let e = s_expand(s, l);
    let ambient = n * p;
    if p == 1 {
        if l.is_abelian() && n >= 2 {
            let mut v = vec![Rat::zero(); ambient];
            v[0] = rint(1);
            let basis = vec![v];
            let checks = verify_ideal(&e.algebra, &basis)?;
            return Ok(IdealCertificate { ambient, basis, checks });
        }
        return Err(Error::NoCertificate);
    }
    let mut basis = Vec::new();
    for a in 0..n {
        for t in 1..p {
            let mut v = vec![Rat::zero(); ambient];
            v[a * p] = rint(1);
            v[a * p + t] = rint(-1);
            basis.push(v);
        }
    }
    let checks = verify_ideal(&e.algebra, &basis)?;
    Ok(IdealCertificate { ambient, basis, checks })
}

/// One ideal of a (partial) splitting: the common eigenvector it is built
/// from, its eigenvalue tuple, and the normalization making the part close
/// on the base algebra's own constants.
#[derive(Clone, Debug)]
pub struct SplitPart {
    pub eigenvector: Vec<Rat>,
    pub eigenvalues: Vec<i64>,
    pub scale: Rat,
}

/// Outcome of [`split_direct_sum`].
#[derive(Clone, Debug)]
pub struct SplitReport {
    /// True iff the expansion was verified isomorphic to P copies of the
    /// base via an explicit basis change.
    pub full: bool,
    pub parts: Vec<SplitPart>,
    pub complement_dim: usize,
    pub witness: Option<RatMatrix>,
}

/// Integer values t for which `m - tI` is singular.
fn integer_eigenvalues(m: &RatMatrix) -> Vec<i64> {
    let bound = m.gershgorin_bound();
    let p = m.rows();
    (-bound..=bound)
        .filter(|&t| {
            let shifted = m.sub(&RatMatrix::identity(p).scale(&rint(t)));
            shifted.rational_rank() < p
        })
        .collect()
}

/// Try to split the expansion of `l` by `s` into ideals each carrying the
/// base algebra's constants, one per common integer eigenvector of the
/// multiplication operators. A common eigenvector `v` with eigenvalue tuple
/// `t` spans an ideal `v (x) L` whose brackets close with the factor
/// `s = v . t`; the part is usable iff that factor is nonzero. A full split
/// is claimed only after an explicit basis-change verification against the
/// P-fold direct sum.
pub fn split_direct_sum(s: &Semigroup, l: &LieAlgebra) -> SplitReport {
    let p = s.order();
    let n = l.dim();
    let reg = regular_representation(s);
    let candidates: Vec<Vec<i64>> =
        reg.operators.iter().map(integer_eigenvalues).collect();
    // common eigenvectors: for each eigenvalue tuple, the kernel of the
    // stacked shifted operators
    let mut parts: Vec<SplitPart> = Vec::new();
    for tuple in candidates.iter().multi_cartesian_product() {
        let tuple: Vec<i64> = tuple.into_iter().copied().collect();
        let mut stacked = RatMatrix::zeros(p * p, p);
        for (a, (&t, m)) in tuple.iter().zip(&reg.operators).enumerate() {
            let shifted = m.sub(&RatMatrix::identity(p).scale(&rint(t)));
            for i in 0..p {
                for j in 0..p {
                    stacked.set(a * p + i, j, shifted.get(i, j).clone());
                }
            }
        }
        for v in stacked.kernel_basis() {
            let dot: Rat = v.iter().zip(&tuple).map(|(x, &t)| x * rint(t)).sum();
            if dot.is_zero() {
                continue;
            }
            parts.push(SplitPart { eigenvector: v, eigenvalues: tuple.clone(), scale: dot });
        }
    }
    // keep a maximal independent subset, in discovery order
    let mut kept: Vec<SplitPart> = Vec::new();
    for part in parts {
        let mut vs: Vec<Vec<Rat>> = kept.iter().map(|q| q.eigenvector.clone()).collect();
        vs.push(part.eigenvector.clone());
        if Subspace::span(p, &vs).dim() == vs.len() {
            kept.push(part);
        }
    }
    let complement_dim = n * (p - kept.len());
    if kept.len() == p {
        // candidate full split: columns r*N + a hold (1/scale_r) v_r (x) X_a
        let mut a = RatMatrix::zeros(n * p, n * p);
        for (r, part) in kept.iter().enumerate() {
            for gen in 0..n {
                for alpha in 0..p {
                    a.set(gen * p + alpha, r * n + gen, &part.eigenvector[alpha] / &part.scale);
                }
            }
        }
        let e = s_expand(s, l);
        let mut copies = l.clone();
        for _ in 1..p {
            copies = copies.direct_sum(l);
        }
        if let Ok(true) = crate::discovery::verify_isomorphism(&e.algebra, &copies, &a) {
            return SplitReport { full: true, parts: kept, complement_dim: 0, witness: Some(a) };
        }
    }
    SplitReport { full: false, parts: kept, complement_dim, witness: None }
}
