//! Finite commutative semigroups as multiplication tables: validation,
//! selector tensors, M_K matrices, enumeration and isomorphism testing.

use itertools::Itertools;

use crate::ratlin::{rint, RatMatrix};
use crate::{Error, Result};

/// A finite commutative semigroup given by its multiplication table.
/// `table[a][b]` is the index of the product of elements `a` and `b`
/// (0-based internally; JSON and report output use 1-based labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    name: String,
    order: usize,
    table: Vec<Vec<usize>>,
}

/// Outcome of [`validate_semigroup`] on a raw table.
#[derive(Clone, Debug)]
pub enum TableReport {
    Ok(Semigroup),
    NotCommutative { a: usize, b: usize },
    /// `(a*b)*c != a*(b*c)` for this triple.
    NotAssociative { a: usize, b: usize, c: usize },
}

/// One-hot selector tensor: `k[a][b][c] = 1` iff the product of `a` and `b`
/// is `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectorTensor {
    pub order: usize,
    k: Vec<Vec<Vec<u8>>>,
}

impl SelectorTensor {
    pub fn get(&self, a: usize, b: usize, c: usize) -> u8 {
        self.k[a][b][c]
    }
}

/// Check ranges, commutativity and associativity of a raw table.
pub fn validate_semigroup(name: impl Into<String>, table: &[Vec<usize>]) -> Result<TableReport> {
    let p = table.len();
    if p == 0 || table.iter().any(|row| row.len() != p) {
        return Err(Error::IndexOutOfRange(format!("table is not a nonempty {p}x{p} grid")));
    }
    for row in table {
        for &v in row {
            if v >= p {
                return Err(Error::IndexOutOfRange(format!("table entry {v} with order {p}")));
            }
        }
    }
    for a in 0..p {
        for b in (a + 1)..p {
            if table[a][b] != table[b][a] {
                return Ok(TableReport::NotCommutative { a, b });
            }
        }
    }
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Ok(TableReport::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(TableReport::Ok(Semigroup { name: name.into(), order: p, table: table.to_vec() }))
}

impl Semigroup {
    /// Build from a table, failing on any invariant violation.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        match validate_semigroup(name, &table)? {
            TableReport::Ok(s) => Ok(s),
            TableReport::NotCommutative { a, b } => Err(Error::Invalid(format!(
                "table is not commutative at ({a}, {b})"
            ))),
            TableReport::NotAssociative { a, b, c } => Err(Error::Invalid(format!(
                "associativity fails at triple ({a}, {b}, {c})"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Product of two elements.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Multiplication table rendered in the row/column layout used for
    /// report output, with 1-based element labels.
    pub fn render_table(&self) -> String {
        let p = self.order;
        let mut out = String::new();
        out.push_str("  * |");
        for b in 0..p {
            out.push_str(&format!(" l{:<2}", b + 1));
        }
        out.push('\n');
        out.push_str(&format!("----+{}\n", "----".repeat(p)));
        for a in 0..p {
            out.push_str(&format!("l{:<2} |", a + 1));
            for b in 0..p {
                out.push_str(&format!(" l{:<2}", self.table[a][b] + 1));
            }
            out.push('\n');
        }
        out
    }
}

/// Selector tensor of a validated semigroup.
pub fn selectors(s: &Semigroup) -> SelectorTensor {
    let p = s.order();
    let mut k = vec![vec![vec![0u8; p]; p]; p];
    for a in 0..p {
        for b in 0..p {
            k[a][b][s.mul(a, b)] = 1;
        }
    }
    SelectorTensor { order: p, k }
}

/// The P x P matrix with entry (i, j) = sum_{c,d} K[i][c][d] K[j][d][c].
/// By one-hotness this counts the elements c with `j*(i*c) = c`.
pub fn mk_matrix(s: &Semigroup) -> RatMatrix {
    let p = s.order();
    let mut m = RatMatrix::zeros(p, p);
    for i in 0..p {
        for j in 0..p {
            let count = (0..p).filter(|&c| s.mul(j, s.mul(i, c)) == c).count();
            m.set(i, j, rint(count as i64));
        }
    }
    m
}

/// The absorbing element, if one exists (at most one can).
pub fn zero_element(s: &Semigroup) -> Option<usize> {
    (0..s.order()).find(|&z| (0..s.order()).all(|a| s.mul(z, a) == z))
}

/// Number of distinct unordered element pairs, P(P+1)/2.
pub fn selector_pair_count(s: &Semigroup) -> usize {
    let p = s.order();
    p * (p + 1) / 2
}

/// All commutative associative tables on `p` labeled elements, in
/// lexicographic order of the flattened table. With `up_to_iso`, only the
/// lexicographically minimal representative of each isomorphism class.
pub fn enumerate_semigroups(p: usize, up_to_iso: bool) -> Vec<Semigroup> {
    assert!(p >= 1);
    let mut out = Vec::new();
    let mut table = vec![vec![0usize; p]; p];
    backtrack(&mut table, p, 0, &mut out);
    if up_to_iso {
        out.retain(|s| {
            let flat = flatten(s.table());
            // keep only the minimum over all relabelings
            (0..p).permutations(p).all(|perm| flatten(&relabel(s.table(), &perm)) >= flat)
        });
    }
    out
}

fn flatten(table: &[Vec<usize>]) -> Vec<usize> {
    table.iter().flatten().copied().collect()
}

fn relabel(table: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let p = table.len();
    let mut out = vec![vec![0usize; p]; p];
    for a in 0..p {
        for b in 0..p {
            out[perm[a]][perm[b]] = perm[table[a][b]];
        }
    }
    out
}

/// Fill the upper triangle cell by cell, pruning on any associativity triple
/// whose three needed products are already determined.
fn backtrack(table: &mut Vec<Vec<usize>>, p: usize, cell: usize, out: &mut Vec<Semigroup>) {
    let cells: usize = p * (p + 1) / 2;
    if cell == cells {
        if let Ok(TableReport::Ok(s)) =
            validate_semigroup(format!("enum{p}-{}", out.len() + 1), table)
        {
            out.push(s);
        }
        return;
    }
    // cell index -> (a, b) with a <= b, row-major over the upper triangle
    let (a, b) = {
        let mut idx = cell;
        let mut row = 0;
        while idx >= p - row {
            idx -= p - row;
            row += 1;
        }
        (row, row + idx)
    };
    for v in 0..p {
        table[a][b] = v;
        table[b][a] = v;
        if partial_associative(table, p, a, b) {
            backtrack(table, p, cell + 1, out);
        }
    }
    // mark undetermined again: cells are filled in order, so reset to 0 and
    // rely on `determined` below
    table[a][b] = 0;
    table[b][a] = 0;
}

/// A cell (x, y) is determined once its upper-triangle position has been
/// assigned; with row-major fill order that is exactly (min, max) <= (a, b)
/// in the fill sequence.
fn cell_rank(p: usize, x: usize, y: usize) -> usize {
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    // rank of (lo, hi) in the row-major upper-triangle order
    (0..lo).map(|r| p - r).sum::<usize>() + (hi - lo)
}

fn partial_associative(table: &[Vec<usize>], p: usize, a: usize, b: usize) -> bool {
    let last = cell_rank(p, a, b);
    let det = |x: usize, y: usize| cell_rank(p, x, y) <= last;
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                if !det(x, y) || !det(y, z) {
                    continue;
                }
                let xy = table[x][y];
                let yz = table[y][z];
                if det(xy, z) && det(x, yz) && table[xy][z] != table[x][yz] {
                    return false;
                }
            }
        }
    }
    true
}

/// A relabeling permutation `perm` with `perm[a*b] = perm[a]*perm[b]`, if one
/// exists. `perm[i]` is the image of element `i` of `s1` in `s2`.
pub fn is_isomorphic(s1: &Semigroup, s2: &Semigroup) -> Option<Vec<usize>> {
    if s1.order() != s2.order() {
        return None;
    }
    let p = s1.order();
    let profile = |s: &Semigroup, a: usize| -> (bool, Vec<usize>) {
        // idempotency plus sorted multiset of row products
        let mut row: Vec<usize> = (0..p).map(|b| s.mul(a, b)).collect();
        row.sort_unstable();
        (s.mul(a, a) == a, row)
    };
    // prefilter: global idempotent count and zero presence must agree
    let idem = |s: &Semigroup| (0..p).filter(|&a| s.mul(a, a) == a).count();
    if idem(s1) != idem(s2) || zero_element(s1).is_some() != zero_element(s2).is_some() {
        return None;
    }
    let p1: Vec<_> = (0..p).map(|a| profile(s1, a).0).collect();
    let p2: Vec<_> = (0..p).map(|a| profile(s2, a).0).collect();
    'outer: for perm in (0..p).permutations(p) {
        for a in 0..p {
            if p1[a] != p2[perm[a]] {
                continue 'outer;
            }
        }
        let ok = (0..p)
            .cartesian_product(0..p)
            .all(|(a, b)| perm[s1.mul(a, b)] == s2.mul(perm[a], perm[b]));
        if ok {
            return Some(perm);
        }
    }
    None
}

/// Z2 with the identity first: table [[0,1],[1,0]].
pub fn z2() -> Semigroup {
    Semigroup::new("Z2", vec![vec![0, 1], vec![1, 0]]).unwrap()
}

/// Two-element chain semilattice with the absorbing element first:
/// table [[0,0],[0,1]].
pub fn semilattice2() -> Semigroup {
    Semigroup::new("semilattice2", vec![vec![0, 0], vec![0, 1]]).unwrap()
}

/// The same semilattice labeled with the identity-like element first:
/// table [[0,1],[1,1]].
pub fn semilattice2_identity_first() -> Semigroup {
    Semigroup::new("semilattice2-idfirst", vec![vec![0, 1], vec![1, 1]]).unwrap()
}

/// Null semigroup of order 2: every product is the first element.
pub fn null2() -> Semigroup {
    Semigroup::new("null2", vec![vec![0, 0], vec![0, 0]]).unwrap()
}

/// Null semigroup of arbitrary order.
pub fn null_of_order(p: usize) -> Semigroup {
    Semigroup::new(format!("null{p}"), vec![vec![0; p]; p]).unwrap()
}

/// One-element semigroup.
pub fn trivial() -> Semigroup {
    Semigroup::new("trivial", vec![vec![0]]).unwrap()
}

/// Resolve a built-in semigroup by name.
pub fn standard_semigroup(name: &str) -> Result<Semigroup> {
    match name.trim() {
        "z2" | "Z2" => Ok(z2()),
        "semilattice2" => Ok(semilattice2()),
        "semilattice2-idfirst" => Ok(semilattice2_identity_first()),
        "null2" => Ok(null2()),
        "null3" => Ok(null_of_order(3)),
        "trivial" => Ok(trivial()),
        other => Err(Error::UnknownName(other.into())),
    }
}
