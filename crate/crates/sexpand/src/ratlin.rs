//! Exact rational scalars and dense matrices: arithmetic, rank, kernel and
//! Sylvester inertia. No floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// Rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Sylvester inertia of a symmetric matrix: counts of positive, negative and
/// zero eigenvalues (with multiplicity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InertiaSignature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl InertiaSignature {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Self { n_plus, n_minus, n_zero }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    /// Character: positive count minus negative count.
    pub fn chi(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }
}

impl std::fmt::Display for InertiaSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rint(x)).collect()).collect())
    }

    pub fn diagonal(diag: &[Rat]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn column_vector(entries: Vec<Rat>) -> Self {
        let n = entries.len();
        Self { rows: n, cols: 1, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let data = self.data.iter().map(|a| a * s).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Kronecker product; entry ((i,k),(j,l)) = self[i][j] * other[k][l] in
    /// the self-major flattening.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Sylvester inertia by symmetric congruence elimination.
    ///
    /// Pivots on a nonzero diagonal entry; when the remaining diagonal is
    /// entirely zero but an off-diagonal entry survives, the congruence
    /// `e_i <- e_i + e_j` exposes a nonzero diagonal entry (each hyperbolic
    /// pair contributes one positive and one negative pivot).
    pub fn exact_inertia(&self) -> Result<InertiaSignature> {
        if let Some((i, j)) = self.first_asymmetry() {
            return Err(Error::NonSymmetric(i, j));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut n_plus = 0;
        let mut n_minus = 0;
        let mut n_zero = 0;
        for k in 0..n {
            // locate a pivot in the trailing block
            let mut pivot = (k..n).find(|&i| !a.get(i, i).is_zero());
            if pivot.is_none() {
                let mut off = None;
                'scan: for i in k..n {
                    for j in (i + 1)..n {
                        if !a.get(i, j).is_zero() {
                            off = Some((i, j));
                            break 'scan;
                        }
                    }
                }
                match off {
                    Some((i, j)) => {
                        // e_i <- e_i + e_j, applied congruently
                        for c in 0..n {
                            let v = a.get(i, c) + a.get(j, c);
                            a.set(i, c, v);
                        }
                        for r in 0..n {
                            let v = a.get(r, i) + a.get(r, j);
                            a.set(r, i, v);
                        }
                        pivot = Some(i);
                    }
                    None => {
                        n_zero += n - k;
                        break;
                    }
                }
            }
            let p = pivot.unwrap();
            a.swap_rows(k, p);
            a.swap_cols(k, p);
            let d = a.get(k, k).clone();
            if d.is_positive() {
                n_plus += 1;
            } else {
                n_minus += 1;
            }
            for r in (k + 1)..n {
                if a.get(r, k).is_zero() {
                    continue;
                }
                let f = a.get(r, k) / &d;
                for c in k..n {
                    let v = a.get(r, c) - &f * a.get(k, c);
                    a.set(r, c, v);
                }
                for c in k..n {
                    let v = a.get(c, r) - &f * a.get(c, k);
                    a.set(c, r, v);
                }
            }
        }
        Ok(InertiaSignature { n_plus, n_minus, n_zero })
    }

    /// Reduced row echelon form; returns the reduced matrix and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).recip();
            for j in c..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i != r && !a.get(i, c).is_zero() {
                    let f = a.get(i, c).clone();
                    for j in c..a.cols {
                        let v = a.get(i, j) - &f * a.get(r, j);
                        a.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Rank over the rationals.
    pub fn rational_rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, in the order determined by the free
    /// columns of the reduced echelon form. Empty iff rank = cols.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().peekable();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            pivot_of_col[pc] = Some(row);
        }
        for free in 0..self.cols {
            if piv_iter.peek() == Some(&&free) {
                piv_iter.next();
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (col, pr) in pivot_of_col.iter().enumerate() {
                if let Some(row) = pr {
                    v[col] = -r.get(*row, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse, or `SingularMatrix`.
    pub fn invert(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// For an integral matrix, all integer eigenvalues in `[-bound, bound]`
    /// together with exact eigenspace bases, sorted by eigenvalue.
    pub fn integer_eigen_spectrum(&self, bound: i64) -> Result<Vec<(i64, Vec<Vec<Rat>>)>> {
        assert!(self.is_square());
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).is_integer() {
                    return Err(Error::NonIntegerEntry(i, j));
                }
            }
        }
        let mut out = Vec::new();
        for t in -bound..=bound {
            let shifted = self.sub(&Self::identity(self.rows).scale(&rint(t)));
            let basis = shifted.kernel_basis();
            if !basis.is_empty() {
                out.push((t, basis));
            }
        }
        Ok(out)
    }

    /// Largest absolute row sum, rounded up to an integer. Upper bound for
    /// every real eigenvalue of an integral matrix.
    pub fn gershgorin_bound(&self) -> i64 {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.abs())
                    .sum::<Rat>()
                    .ceil()
                    .to_integer()
                    .to_i64()
                    .unwrap_or(i64::MAX)
            })
            .max()
            .unwrap_or(0)
    }
}

impl std::fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Row space of a set of vectors, kept in reduced echelon form for exact
/// membership tests.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rref_rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        let m = RatMatrix::from_rows(vectors.to_vec());
        let (r, pivots) = m.rref();
        let rref_rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self { ambient, rref_rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rref_rows.len()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for (row, &pc) in self.rref_rows.iter().zip(&self.pivots) {
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}
