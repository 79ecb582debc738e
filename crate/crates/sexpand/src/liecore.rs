//! Lie algebras as exact structure-constant tensors: validation, adjoint
//! representation, Killing form, standard constructions and basis changes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::ratlin::{rint, Rat, RatMatrix};
use crate::{Error, Result};

/// A finite-dimensional Lie algebra over Q, stored as a sparse
/// structure-constant tensor.
///
/// Only brackets with `i < j` are stored; the full tensor is reconstructed
/// by antisymmetry, so `C[i][j][k] = -C[j][i][k]` holds structurally.
/// The Jacobi identity is a separate, explicit check ([`LieAlgebra::validate`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    generator_names: Vec<String>,
    /// (i, j) with i < j -> sorted nonzero terms (k, coefficient).
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
}

/// One failing Jacobi quadruple, with the nonvanishing sum.
#[derive(Clone, Debug)]
pub struct JacobiFailure {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub r: usize,
    pub value: Rat,
}

/// Outcome of [`LieAlgebra::validate`].
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub failure: Option<JacobiFailure>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Adjoint representation matrix of one generator.
///
/// The matrix acts on coordinate columns: entry (k, j) is `C[i][j][k]`, so
/// `ad([X, Y]) = [ad(X), ad(Y)]` holds as a plain matrix identity.
#[derive(Clone, Debug)]
pub struct AdjointMatrix {
    pub generator: usize,
    pub matrix: RatMatrix,
}

impl LieAlgebra {
    /// Build an algebra from bracket entries `(i, j, k, coefficient)` with
    /// `i < j`. Entries with `i >= j` or out-of-range indices are rejected;
    /// duplicate `(i, j, k)` coefficients are summed.
    pub fn new(
        name: impl Into<String>,
        generator_names: Vec<String>,
        entries: Vec<(usize, usize, usize, Rat)>,
    ) -> Result<Self> {
        let dim = generator_names.len();
        let mut brackets: BTreeMap<(usize, usize), BTreeMap<usize, Rat>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket entry ({i}, {j}, {k}) with dim {dim}"
                )));
            }
            if i >= j {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket entry ({i}, {j}) violates the i < j storage invariant"
                )));
            }
            *brackets.entry((i, j)).or_default().entry(k).or_insert_with(Rat::zero) += c;
        }
        let brackets = brackets
            .into_iter()
            .map(|(ij, terms)| (ij, terms.into_iter().filter(|(_, c)| !c.is_zero()).collect()))
            .filter(|(_, terms): &(_, Vec<_>)| !terms.is_empty())
            .collect();
        Ok(Self { name: name.into(), dim, generator_names, brackets })
    }

    pub fn abelian(n: usize) -> Self {
        Self {
            name: format!("abelian{n}"),
            dim: n,
            generator_names: (1..=n).map(|i| format!("a{i}")).collect(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Stored bracket entries, `(i, j)` with `i < j` only.
    pub fn stored_brackets(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rat)])> {
        self.brackets.iter().map(|(&(i, j), terms)| (i, j, terms.as_slice()))
    }

    /// Sparse bracket `[X_i, X_j]` for arbitrary index order.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        if i == j {
            return Vec::new();
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        match self.brackets.get(&(a, b)) {
            None => Vec::new(),
            Some(terms) if sign == 1 => terms.clone(),
            Some(terms) => terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// Structure constant `C[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rat {
        self.bracket(i, j)
            .into_iter()
            .find(|(t, _)| *t == k)
            .map(|(_, c)| c)
            .unwrap_or_else(Rat::zero)
    }

    /// Check the Jacobi identity over all quadruples; report the first
    /// failing one.
    pub fn validate(&self) -> ValidationReport {
        let failure = match self.integer_brackets() {
            Some(ib) => self.jacobi_scan_int(&ib),
            None => self.jacobi_scan_rat(),
        };
        ValidationReport { failure }
    }

    /// Validate and return self, or an error naming the failing quadruple.
    pub fn validated(self) -> Result<Self> {
        match self.validate().failure {
            None => Ok(self),
            Some(f) => Err(Error::Invalid(format!(
                "Jacobi identity fails for algebra '{}' at (i, j, k, r) = ({}, {}, {}, {}): sum = {}",
                self.name, f.i, f.j, f.k, f.r, f.value
            ))),
        }
    }

    /// Integer-rescaled brackets for the fast Jacobi path. The Jacobi sums
    /// are quadratic in the constants, so a global positive rescale does not
    /// change which of them vanish.
    fn integer_brackets(&self) -> Option<BTreeMap<(usize, usize), Vec<(usize, i128)>>> {
        let mut lcm = BigInt::one();
        for terms in self.brackets.values() {
            for (_, c) in terms {
                lcm = lcm.lcm(c.denom());
            }
        }
        let mut out = BTreeMap::new();
        for (&ij, terms) in &self.brackets {
            let mut iterms = Vec::with_capacity(terms.len());
            for (k, c) in terms {
                let scaled = c.numer() * &lcm / c.denom();
                iterms.push((*k, scaled.to_i128()?));
            }
            out.insert(ij, iterms);
        }
        Some(out)
    }

    fn jacobi_scan_int(
        &self,
        brackets: &BTreeMap<(usize, usize), Vec<(usize, i128)>>,
    ) -> Option<JacobiFailure> {
        let n = self.dim;
        let br = |i: usize, j: usize| -> Option<(&Vec<(usize, i128)>, i128)> {
            if i < j {
                brackets.get(&(i, j)).map(|t| (t, 1))
            } else if j < i {
                brackets.get(&(j, i)).map(|t| (t, -1))
            } else {
                None
            }
        };
        let mut acc: Vec<i128> = vec![0; n];
        let mut touched: Vec<usize> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        if let Some((terms, s1)) = br(a, b) {
                            for &(m, coeff) in terms {
                                if let Some((inner, s2)) = br(m, c) {
                                    let f = coeff * s1 * s2;
                                    for &(r, d) in inner {
                                        if acc[r] == 0 {
                                            touched.push(r);
                                        }
                                        acc[r] += f * d;
                                    }
                                }
                            }
                        }
                    }
                    let mut bad = None;
                    for &r in &touched {
                        if acc[r] != 0 && bad.is_none() {
                            bad = Some((r, acc[r]));
                        }
                        acc[r] = 0;
                    }
                    touched.clear();
                    if let Some((r, v)) = bad {
                        return Some(JacobiFailure { i, j, k, r, value: rint(v as i64) });
                    }
                }
            }
        }
        None
    }

    fn jacobi_scan_rat(&self) -> Option<JacobiFailure> {
        let n = self.dim;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, coeff) in self.bracket(a, b) {
                            for (r, d) in self.bracket(m, c) {
                                *acc.entry(r).or_insert_with(Rat::zero) += &coeff * d;
                            }
                        }
                    }
                    for (r, v) in acc {
                        if !v.is_zero() {
                            return Some(JacobiFailure { i, j, k, r, value: v });
                        }
                    }
                }
            }
        }
        None
    }

    /// Adjoint matrix of generator `i`.
    pub fn adjoint(&self, i: usize) -> Result<AdjointMatrix> {
        if i >= self.dim {
            return Err(Error::IndexOutOfRange(format!("generator {i} of dim {}", self.dim)));
        }
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket(i, j) {
                m.set(k, j, c);
            }
        }
        Ok(AdjointMatrix { generator: i, matrix: m })
    }

    /// Killing form `g[i][j] = sum_{k,l} C[i][k][l] C[j][l][k]`.
    pub fn killing_form(&self) -> RatMatrix {
        let n = self.dim;
        let mut g = RatMatrix::zeros(n, n);
        // cache sparse rows of the tensor: ad_terms[i][k] = bracket(i, k)
        let ad_terms: Vec<Vec<Vec<(usize, Rat)>>> =
            (0..n).map(|i| (0..n).map(|k| self.bracket(i, k)).collect()).collect();
        for i in 0..n {
            for j in i..n {
                let mut s = Rat::zero();
                for k in 0..n {
                    for (l, c) in &ad_terms[i][k] {
                        for (t, d) in &ad_terms[j][*l] {
                            if *t == k {
                                s += c * d;
                            }
                        }
                    }
                }
                g.set(i, j, s.clone());
                g.set(j, i, s);
            }
        }
        g
    }

    /// Transform the structure constants through an invertible basis change.
    /// Columns of `a` are the new basis vectors expressed in the old basis.
    pub fn change_of_basis(&self, a: &RatMatrix) -> Result<Self> {
        if a.rows() != self.dim || a.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "basis change is {}x{}, algebra dim is {}",
                a.rows(),
                a.cols(),
                self.dim
            )));
        }
        let inv = a.invert()?;
        let n = self.dim;
        let mut entries = Vec::new();
        for p in 0..n {
            for q in (p + 1)..n {
                // [Y_p, Y_q] = sum_{i,j} a[i][p] a[j][q] C_ij^k X_k, X_k = sum_c inv[c][k] Y_c
                let mut target: BTreeMap<usize, Rat> = BTreeMap::new();
                for i in 0..n {
                    if a.get(i, p).is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if a.get(j, q).is_zero() {
                            continue;
                        }
                        let f = a.get(i, p) * a.get(j, q);
                        for (k, c) in self.bracket(i, j) {
                            for t in 0..n {
                                let w = inv.get(t, k);
                                if !w.is_zero() {
                                    *target.entry(t).or_insert_with(Rat::zero) += &f * &c * w;
                                }
                            }
                        }
                    }
                }
                for (t, c) in target {
                    if !c.is_zero() {
                        entries.push((p, q, t, c));
                    }
                }
            }
        }
        Self::new(
            format!("{}'", self.name),
            (0..n).map(|i| format!("Y{}", i + 1)).collect(),
            entries,
        )
    }

    /// Block direct sum with zero cross-brackets.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let offset = self.dim;
        let mut names = self.generator_names.clone();
        names.extend(other.generator_names.iter().cloned());
        let mut brackets = self.brackets.clone();
        for (&(i, j), terms) in &other.brackets {
            brackets.insert(
                (i + offset, j + offset),
                terms.iter().map(|(k, c)| (k + offset, c.clone())).collect(),
            );
        }
        Self {
            name: format!("{}(+){}", self.name, other.name),
            dim: self.dim + other.dim,
            generator_names: names,
            brackets,
        }
    }
}

/// Index of the `so(n)` generator `T[a][b]` with `a < b`, in lexicographic
/// order of (a, b).
fn so_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    // generators (0,1), (0,2), ..., (0,n-1), (1,2), ...
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// `so(n)` on the antisymmetric basis `T[a][b] = -T[b][a]`, with
/// `[T_ab, T_cd] = d_bc T_ad - d_ac T_bd - d_bd T_ac + d_ad T_bc`.
/// The Killing form is negative definite (all generators compact).
fn build_so(n: usize) -> LieAlgebra {
    assert!(n >= 3);
    let mut names = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            names.push(format!("T{}_{}", a + 1, b + 1));
        }
    }
    // signed index of T_xy for x != y
    let t = |x: usize, y: usize| -> (usize, i64) {
        if x < y {
            (so_index(n, x, y), 1)
        } else {
            (so_index(n, y, x), -1)
        }
    };
    let mut entries = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in 0..n {
                for d in (c + 1)..n {
                    let i = so_index(n, a, b);
                    let j = so_index(n, c, d);
                    if i >= j {
                        continue;
                    }
                    let mut terms: BTreeMap<usize, i64> = BTreeMap::new();
                    let mut addt = |x: usize, y: usize, s: i64| {
                        if x != y {
                            let (idx, sg) = t(x, y);
                            *terms.entry(idx).or_insert(0) += s * sg;
                        }
                    };
                    if b == c {
                        addt(a, d, 1);
                    }
                    if a == c {
                        addt(b, d, -1);
                    }
                    if b == d {
                        addt(a, c, -1);
                    }
                    if a == d {
                        addt(b, c, 1);
                    }
                    for (k, v) in terms {
                        if v != 0 {
                            entries.push((i, j, k, rint(v)));
                        }
                    }
                }
            }
        }
    }
    LieAlgebra::new(format!("so{n}"), names, entries).expect("so(n) construction")
}

fn build_sl2() -> LieAlgebra {
    // (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    LieAlgebra::new(
        "sl2",
        vec!["h".into(), "e".into(), "f".into()],
        vec![(0, 1, 1, rint(2)), (0, 2, 2, rint(-2)), (1, 2, 0, rint(1))],
    )
    .expect("sl2 construction")
}

fn build_heisenberg3() -> LieAlgebra {
    // (x, y, z): [x,y] = z
    LieAlgebra::new(
        "heisenberg3",
        vec!["x".into(), "y".into(), "z".into()],
        vec![(0, 1, 2, rint(1))],
    )
    .expect("heisenberg3 construction")
}

/// Resolve a built-in algebra by name: `so3`..`so16` (also `so(3)` style),
/// `sl2`, `heisenberg3`, `abelianN` / `abelian(N)`, and `+`-joined direct
/// sums of those, e.g. `sl2+so3`.
pub fn standard_algebra(name: &str) -> Result<LieAlgebra> {
    let name = name.trim();
    if let Some((first, rest)) = name.split_once('+') {
        let a = standard_algebra(first)?;
        let b = standard_algebra(rest)?;
        return Ok(a.direct_sum(&b));
    }
    let canon = name.replace(['(', ')'], "");
    if let Some(ns) = canon.strip_prefix("so") {
        let n: usize = ns.parse().map_err(|_| Error::UnknownName(name.into()))?;
        if !(3..=16).contains(&n) {
            return Err(Error::UnknownName(name.into()));
        }
        return Ok(build_so(n));
    }
    if let Some(ns) = canon.strip_prefix("abelian") {
        let n: usize = ns.parse().map_err(|_| Error::UnknownName(name.into()))?;
        return Ok(LieAlgebra::abelian(n));
    }
    match canon.as_str() {
        "sl2" => Ok(build_sl2()),
        "heisenberg3" => Ok(build_heisenberg3()),
        _ => Err(Error::UnknownName(name.into())),
    }
}
