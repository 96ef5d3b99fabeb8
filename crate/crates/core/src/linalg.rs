//! Sparse exact row reduction: ranks, nullspaces and spans.

use std::collections::BTreeMap;

use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;

pub type SparseRow = Vec<(usize, Scalar)>;

fn sparse(v: &[Scalar]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, *x)).collect()
}

fn entry(row: &SparseRow, col: usize) -> Scalar {
    row.binary_search_by_key(&col, |e| e.0).map(|p| row[p].1).unwrap_or_default()
}

/// `a - f * b`.
fn axpy(a: &SparseRow, f: Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * b[j].1)));
            j += 1;
        } else {
            let x = a[i].1 - f * b[j].1;
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, pivots: BTreeMap::new() }
    }

    pub fn from_matrix(m: &ExactMatrix) -> Self {
        let mut r = RowReducer::new(m.cols());
        for i in 0..m.rows() {
            r.push(m.row(i));
        }
        r
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut k = 0;
        while k < row.len() {
            let (col, x) = row[k];
            if let Some(p) = self.pivots.get(&col) {
                row = axpy(&row, x, p);
            } else {
                k += 1;
            }
        }
        row
    }

    /// Adds a row, returning `true` when it was independent of the others.
    pub fn push(&mut self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.ncols);
        self.push_sparse(sparse(row))
    }

    pub fn push_sparse(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some(&(lead, x)) = row.first() else {
            return false;
        };
        let s = x.inv().expect("nonzero pivot");
        let row: SparseRow = row.into_iter().map(|(c, y)| (c, y * s)).collect();
        for other in self.pivots.values_mut() {
            let f = entry(other, lead);
            if !f.is_zero() {
                *other = axpy(other, f, &row);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: &[Scalar]) -> bool {
        self.reduce(sparse(row)).is_empty()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free
    /// column with that coordinate set to 1.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![Scalar::zero(); self.ncols];
                x[f] = Scalar::one();
                for (p, row) in &self.pivots {
                    x[*p] = -entry(row, f);
                }
                x
            })
            .collect()
    }

    pub fn rref_rows(&self) -> Vec<Vec<Scalar>> {
        self.pivots
            .values()
            .map(|r| {
                let mut x = vec![Scalar::zero(); self.ncols];
                for (c, y) in r {
                    x[*c] = *y;
                }
                x
            })
            .collect()
    }
}

pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    RowReducer::from_matrix(m).nullspace()
}

/// Coefficients `c` with `sum c_i basis_i = target`, if the target lies in
/// the span. The coefficients are unique when the basis is independent.
pub fn solve_in_span(basis: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = target.len();
    let k = basis.len();
    let mut r = RowReducer::new(k + 1);
    for i in 0..n {
        let mut row: SparseRow = Vec::new();
        for (j, b) in basis.iter().enumerate() {
            if !b[i].is_zero() {
                row.push((j, b[i]));
            }
        }
        if !target[i].is_zero() {
            row.push((k, -target[i]));
        }
        r.push_sparse(row);
    }
    if r.pivots.contains_key(&k) {
        return None;
    }
    // particular solution with all free variables zero except the last
    let mut c = vec![Scalar::zero(); k];
    for (p, row) in &r.pivots {
        c[*p] = -entry(row, k);
    }
    Some(c)
}

/// Basis of `{X : L_i X = X R_i for all i}` where `L_i` is `p x p` and
/// `R_i` is `q x q`.
pub fn intertwiner_space(pairs: &[(&ExactMatrix, &ExactMatrix)]) -> Vec<ExactMatrix> {
    let Some((l0, r0)) = pairs.first() else {
        return Vec::new();
    };
    let (p, q) = (l0.rows(), r0.rows());
    // X_{cb} has unknown index b * p + c
    let var = |c: usize, b: usize| b * p + c;
    let mut red = RowReducer::new(p * q);
    for (l, r) in pairs {
        for a in 0..p {
            for b in 0..q {
                let mut eq: BTreeMap<usize, Scalar> = BTreeMap::new();
                for c in 0..p {
                    let x = l.get(a, c);
                    if !x.is_zero() {
                        *eq.entry(var(c, b)).or_default() += x;
                    }
                }
                for c in 0..q {
                    let x = r.get(c, b);
                    if !x.is_zero() {
                        *eq.entry(var(a, c)).or_default() -= x;
                    }
                }
                let row: SparseRow = eq.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !row.is_empty() {
                    red.push_sparse(row);
                }
            }
        }
        if red.rank() == p * q {
            return Vec::new();
        }
    }
    red.nullspace().iter().map(|v| ExactMatrix::from_vec(p, q, v)).collect()
}

/// Basis of the commutant `{X : X F = F X}` of a set of square matrices.
pub fn commutant(frame: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let pairs: Vec<_> = frame.iter().map(|f| (f, f)).collect();
    intertwiner_space(&pairs)
}

/// Basis of the `lambda`-eigenspace of `m`, read off the nullspace of
/// `m - lambda I`.
pub fn eigenspace(m: &ExactMatrix, lambda: Scalar) -> Vec<Vec<Scalar>> {
    let shifted = m - &ExactMatrix::scalar(m.rows(), lambda);
    nullspace(&shifted)
}
