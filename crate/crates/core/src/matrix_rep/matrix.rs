//! Sparse exact rational matrices and incremental echelon spans.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{parse_q, Q};

/// Sparse vector: strictly increasing indices, no zero values.
pub type SparseVec = Vec<(usize, Q)>;

/// `x + c·y` on sparse vectors.
pub fn axpy(x: &[(usize, Q)], c: &Q, y: &[(usize, Q)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = c * &y[j].1;
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = &x[i].1 + c * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A subspace kept in echelon form; each stored row has leading entry 1 at
/// a distinct pivot column.
#[derive(Debug, Clone, Default)]
pub struct EchelonSpan {
    pivots: BTreeMap<usize, SparseVec>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Residual of `v` after eliminating against the stored pivots.
    pub fn reduce(&self, v: &[(usize, Q)]) -> SparseVec {
        let mut v = v.to_vec();
        let mut start = 0;
        loop {
            let Some(pos) = v[start..]
                .iter()
                .position(|(c, _)| self.pivots.contains_key(c))
            else {
                return v;
            };
            let pos = start + pos;
            let (col, coef) = v[pos].clone();
            v = axpy(&v, &-coef, &self.pivots[&col]);
            // entries before `pos` are untouched: pivot rows start at `col`
            start = pos;
        }
    }

    pub fn contains(&self, v: &[(usize, Q)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether it was independent of the span.
    pub fn insert(&mut self, v: &[(usize, Q)]) -> bool {
        let r = self.reduce(v);
        let Some((col, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = Q::one() / lead;
        let r: SparseVec = r.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        self.pivots.insert(col, r);
        true
    }
}

/// Rank of a list of sparse vectors.
pub fn rank_of(vectors: &[SparseVec]) -> usize {
    let mut span = EchelonSpan::new();
    for v in vectors {
        span.insert(v);
    }
    span.rank()
}

/// Exact rational matrix stored as sparse rows.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.push((i, Q::one()));
        }
        m
    }

    /// Sums duplicate positions.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Q)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "entry ({r}, {c}) outside {rows}x{cols}"
            );
            *acc[r].entry(c).or_insert_with(Q::zero) += v;
        }
        MatrixQ {
            rows,
            cols,
            data: acc
                .into_iter()
                .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_sparse_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        MatrixQ {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Q)] {
        &self.data[i]
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.data[r]
            .binary_search_by_key(&c, |(j, _)| *j)
            .map(|k| self.data[r][k].1.clone())
            .unwrap_or_else(|_| Q::zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c.to_owned(), v)))
    }

    pub fn mul(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        MatrixQ {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn add(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix sum shape"
        );
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| axpy(a, &Q::one(), b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MatrixQ) -> MatrixQ {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> MatrixQ {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|row| row.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        }
    }

    /// Kronecker product; `self` indexes the more significant digit.
    pub fn kron(&self, other: &MatrixQ) -> MatrixQ {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, a) in ra {
                    for (cb, b) in rb {
                        row.push((ca * other.cols + cb, a * b));
                    }
                }
                data.push(row);
            }
        }
        MatrixQ {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            data,
        }
    }

    pub fn kron_power(&self, k: usize) -> MatrixQ {
        (0..k).fold(MatrixQ::identity(1), |acc, _| acc.kron(self))
    }

    pub fn transpose(&self) -> MatrixQ {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        MatrixQ {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .fold(Q::zero(), |a, b| a + b)
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.data)
    }

    /// Column `c` as a sparse vector.
    pub fn column(&self, c: usize) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                row.binary_search_by_key(&c, |(j, _)| *j)
                    .ok()
                    .map(|k| (r, row[k].1.clone()))
            })
            .collect()
    }

    /// Columns, as a list of sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    /// Indices of the columns that are independent of all earlier columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut span = EchelonSpan::new();
        self.columns()
            .iter()
            .enumerate()
            .filter_map(|(c, col)| span.insert(col).then_some(c))
            .collect()
    }

    /// Matrix with `rows` rows whose columns are the given sparse vectors.
    pub fn from_columns(rows: usize, cols: &[SparseVec]) -> MatrixQ {
        MatrixQ::from_sparse_rows(rows, cols.to_vec()).transpose()
    }

    /// Restriction to a subset of rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> MatrixQ {
        MatrixQ {
            rows: rows.len(),
            cols: self.cols,
            data: rows.iter().map(|&r| self.data[r].clone()).collect(),
        }
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<MatrixQ> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        // Gauss-Jordan on [A | I]
        let mut rows: Vec<SparseVec> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.push((n + i, Q::one()));
                v
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| rows[r].first().is_some_and(|(c, _)| *c == col))?;
            rows.swap(col, piv);
            let inv = Q::one() / rows[col][0].1.clone();
            rows[col] = rows[col].iter().map(|(c, v)| (*c, v * &inv)).collect();
            for r in 0..n {
                if r == col {
                    continue;
                }
                let coef = rows[r]
                    .binary_search_by_key(&col, |(c, _)| *c)
                    .ok()
                    .map(|k| rows[r][k].1.clone());
                if let Some(coef) = coef {
                    rows[r] = axpy(&rows[r], &-coef, &rows[col]);
                }
            }
        }
        Some(MatrixQ {
            rows: n,
            cols: n,
            data: rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .filter(|(c, _)| *c >= n)
                        .map(|(c, v)| (c - n, v))
                        .collect()
                })
                .collect(),
        })
    }

    /// Flattened row-major as a sparse vector of length `rows·cols`.
    pub fn flatten(&self) -> SparseVec {
        self.triplets()
            .map(|(r, c, v)| (r * self.cols + c, v.clone()))
            .collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            triplets: self
                .triplets()
                .map(|(r, c, v)| (r, c, v.to_string()))
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<MatrixQ, String> {
        let mut trip = Vec::with_capacity(j.triplets.len());
        for (r, c, v) in &j.triplets {
            if *r >= j.rows || *c >= j.cols {
                return Err(format!("entry ({r}, {c}) outside {}x{}", j.rows, j.cols));
            }
            trip.push((*r, *c, parse_q(v).map_err(|e| e.to_string())?));
        }
        Ok(MatrixQ::from_triplets(j.rows, j.cols, trip))
    }
}

/// JSON form `{rows, cols, triplets: [[r, c, "p/q"]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub triplets: Vec<(usize, usize, String)>,
}

impl fmt::Display for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}", self.rows, self.cols)?;
        for (r, c, v) in self.triplets() {
            write!(f, " ({r},{c})={v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixQ{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, qi};
    use proptest::prelude::*;

    fn m(rows: usize, cols: usize, vals: &[i64]) -> MatrixQ {
        MatrixQ::from_triplets(
            rows,
            cols,
            vals.iter()
                .enumerate()
                .map(|(i, &v)| (i / cols, i % cols, qi(v))),
        )
    }

    #[test]
    fn product_and_kron() {
        let a = m(2, 2, &[1, 2, 3, 4]);
        let b = m(2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.mul(&b), m(2, 2, &[2, 1, 4, 3]));
        let k = MatrixQ::identity(2).kron(&b);
        assert_eq!(k.get(0, 1), qi(1));
        assert_eq!(k.get(2, 3), qi(1));
        assert_eq!(k.get(0, 3), qi(0));
        assert_eq!(a.trace(), qi(5));
    }

    #[test]
    fn rank_and_pivots() {
        let a = m(3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 1]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.pivot_columns(), vec![0, 1]);
        assert_eq!(MatrixQ::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn inverse() {
        let a = m(2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), MatrixQ::identity(2));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn json_round_trip() {
        let a = MatrixQ::from_triplets(2, 3, [(0, 2, q(-1, 2)), (1, 0, qi(3))]);
        let j = a.to_json();
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(
            s,
            r#"{"rows":2,"cols":3,"triplets":[[0,2,"-1/2"],[1,0,"3"]]}"#
        );
        let back: MatrixJson = serde_json::from_str(&s).unwrap();
        assert_eq!(MatrixQ::from_json(&back).unwrap(), a);
    }

    /// Dense oracle: rank by fraction-free elimination on `i64`-sized data.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| qi(x)).collect())
            .collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    let pivot = a[rank].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot) {
                        *x -= p * &f;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn rank_matches_dense(rows in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 1..5)) {
            let sparse = MatrixQ::from_triplets(
                rows.len(),
                4,
                rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, qi(v)))),
            );
            prop_assert_eq!(sparse.rank(), dense_rank(&rows));
            prop_assert_eq!(sparse.transpose().rank(), sparse.rank());
        }
    }
}
