//! Sparse integer matrices stored column by column.
//!
//! Every level of a four-fold tensor product of standard simplices is far too
//! large for dense storage, while each column of a face, degeneracy or
//! comparison matrix carries only a handful of entries. Columns are kept
//! sorted by row index with no explicit zeros, so structural equality is
//! mathematical equality.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision integer used for every matrix entry.
pub type Int = BigInt;

/// A sparse column: `(row, value)` pairs sorted by row, values nonzero.
pub type SparseVec = Vec<(usize, Int)>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

/// One entry where two matrices of equal shape disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryDiff {
    pub row: usize,
    pub col: usize,
    pub left: Int,
    pub right: Int,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, Int::one())]).collect(),
        }
    }

    /// Matrix of a map sending basis vector `j` to basis vector `images[j]`.
    pub fn from_basis_map(rows: usize, images: &[usize]) -> Self {
        Matrix {
            rows,
            cols: images.len(),
            columns: images
                .iter()
                .map(|&i| {
                    assert!(i < rows, "basis image {i} out of range {rows}");
                    vec![(i, Int::one())]
                })
                .collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Int)>,
    {
        let mut buckets: Vec<Vec<(usize, Int)>> = vec![Vec::new(); cols];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "triplet ({i},{j}) outside {rows}x{cols}");
            if !v.is_zero() {
                buckets[j].push((i, v));
            }
        }
        let columns = buckets.into_iter().map(normalize_column).collect();
        Matrix { rows, cols, columns }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        let columns: Vec<SparseVec> = columns.into_iter().map(normalize_column).collect();
        for c in &columns {
            if let Some((i, _)) = c.last() {
                assert!(*i < rows, "column entry {i} outside {rows} rows");
            }
        }
        Matrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Builds a matrix from dense rows of machine integers.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, ncols).expect("ragged rows")
    }

    /// Like [`Matrix::from_rows`], but also fixes the column count so that
    /// matrices with zero rows keep their width.
    pub fn from_rows_with_cols(rows: &[Vec<i64>], ncols: usize) -> Result<Self> {
        let mut trip = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {ncols}",
                    r.len()
                )));
            }
            for (j, &v) in r.iter().enumerate() {
                if v != 0 {
                    trip.push((i, j, Int::from(v)));
                }
            }
        }
        Ok(Matrix::from_triplets(rows.len(), ncols, trip))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn column(&self, j: usize) -> &[(usize, Int)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> impl Iterator<Item = &SparseVec> {
        self.columns.iter()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Int {
        match self.columns[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(pos) => self.columns[j][pos].1.clone(),
            Err(_) => Int::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// True when every column is zero or a single unit basis vector with
    /// coefficient one.
    pub fn is_basis_map(&self) -> bool {
        self.columns
            .iter()
            .all(|c| c.is_empty() || (c.len() == 1 && c[0].1.is_one()))
    }

    /// Entries as `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Int)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn transpose(&self) -> Matrix {
        let trip = self.triplets().map(|(i, j, v)| (j, i, v.clone()));
        Matrix::from_triplets(self.cols, self.rows, trip)
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = Accumulator::new(self.rows);
        let columns = other
            .columns
            .iter()
            .map(|col| {
                for (k, b) in col {
                    for (i, a) in &self.columns[*k] {
                        acc.add(*i, a * b);
                    }
                }
                acc.drain()
            })
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &[(usize, Int)]) -> SparseVec {
        let mut acc = Accumulator::new(self.rows);
        for (k, b) in v {
            for (i, a) in &self.columns[*k] {
                acc.add(*i, a * b);
            }
        }
        acc.drain()
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Matrix, sign: i64) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| merge_columns(a, b, sign))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        })
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Int::from(-1))
    }

    pub fn scale(&self, c: &Int) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v * c)).collect())
                .collect(),
        }
    }

    /// Kronecker product with row-major index order: the left factor's index
    /// is the outer one.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a in &self.columns {
            for b in &other.columns {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i1, v1) in a {
                    for (i2, v2) in b {
                        col.push((i1 * other.rows + i2, v1 * v2));
                    }
                }
                columns.push(col);
            }
        }
        Matrix {
            rows,
            cols: self.cols * other.cols,
            columns,
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(blocks: &[Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(Matrix::rows).sum();
        let mut columns = Vec::new();
        let mut offset = 0;
        for b in blocks {
            for c in &b.columns {
                columns.push(c.iter().map(|(i, v)| (i + offset, v.clone())).collect());
            }
            offset += b.rows;
        }
        Matrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix], cols: usize) -> Result<Matrix> {
        let mut trip = Vec::new();
        let mut offset = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Shape(format!("vstack: {} columns, expected {cols}", b.cols)));
            }
            trip.extend(b.triplets().map(|(i, j, v)| (i + offset, j, v.clone())));
            offset += b.rows;
        }
        Ok(Matrix::from_triplets(offset, cols, trip))
    }

    /// Places side by side matrices with equal row counts.
    pub fn hstack(blocks: &[Matrix], rows: usize) -> Result<Matrix> {
        let mut columns = Vec::new();
        for b in blocks {
            if b.rows != rows {
                return Err(Error::Shape(format!("hstack: {} rows, expected {rows}", b.rows)));
            }
            columns.extend(b.columns.iter().cloned());
        }
        Ok(Matrix {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    /// Restricts to the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            columns: cols.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// Restricts to the given rows; `rows[k]` becomes row `k`.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut position = vec![usize::MAX; self.rows];
        for (k, &r) in rows.iter().enumerate() {
            position[r] = k;
        }
        let columns = self
            .columns
            .iter()
            .map(|c| {
                let mut out: SparseVec = c
                    .iter()
                    .filter(|(i, _)| position[*i] != usize::MAX)
                    .map(|(i, v)| (position[*i], v.clone()))
                    .collect();
                out.sort_by_key(|(i, _)| *i);
                out
            })
            .collect();
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            columns,
        }
    }

    /// Every entry where `self` and `other` differ, in column-major order.
    pub fn diff_entries(&self, other: &Matrix) -> Result<Vec<EntryDiff>> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "cannot compare {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Vec::new();
        for (j, (a, b)) in self.columns.iter().zip(&other.columns).enumerate() {
            if a == b {
                continue;
            }
            for (i, _) in merge_columns(a, b, -1) {
                out.push(EntryDiff {
                    row: i,
                    col: j,
                    left: lookup(a, i),
                    right: lookup(b, i),
                });
            }
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<Int>> {
        let mut out = vec![vec![Int::zero(); self.cols]; self.rows];
        for (i, j, v) in self.triplets() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn from_dense(rows: usize, cols: usize, dense: &[Vec<Int>]) -> Matrix {
        let trip = dense.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, v)| (i, j, v.clone()))
        });
        Matrix::from_triplets(rows, cols, trip)
    }

    pub fn max_abs_entry(&self) -> Int {
        self.triplets()
            .map(|(_, _, v)| v.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(f, "  {}", cells.join(" "))?;
            }
        } else {
            writeln!(f, "  {} nonzeros", self.nnz())?;
        }
        write!(f, "]")
    }
}

fn lookup(col: &[(usize, Int)], i: usize) -> Int {
    match col.binary_search_by_key(&i, |(r, _)| *r) {
        Ok(p) => col[p].1.clone(),
        Err(_) => Int::zero(),
    }
}

fn normalize_column(mut col: SparseVec) -> SparseVec {
    col.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(col.len());
    for (i, v) in col {
        match out.last_mut() {
            Some((li, lv)) if *li == i => *lv += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn merge_columns(a: &[(usize, Int)], b: &[(usize, Int)], sign: i64) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut p, mut q) = (0, 0);
    while p < a.len() || q < b.len() {
        let take_a = q >= b.len() || (p < a.len() && a[p].0 < b[q].0);
        let take_b = p >= a.len() || (q < b.len() && b[q].0 < a[p].0);
        if take_a {
            out.push(a[p].clone());
            p += 1;
        } else if take_b {
            let v = if sign < 0 { -&b[q].1 } else { b[q].1.clone() };
            out.push((b[q].0, v));
            q += 1;
        } else {
            let v = if sign < 0 { &a[p].1 - &b[q].1 } else { &a[p].1 + &b[q].1 };
            if !v.is_zero() {
                out.push((a[p].0, v));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

/// Scatter accumulator for building one sparse column at a time.
pub(crate) struct Accumulator {
    values: Vec<Int>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl Accumulator {
    pub(crate) fn new(n: usize) -> Self {
        Accumulator {
            values: vec![Int::zero(); n],
            touched: Vec::new(),
            seen: vec![false; n],
        }
    }

    pub(crate) fn add(&mut self, i: usize, v: Int) {
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i);
        }
        self.values[i] += v;
    }

    pub(crate) fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.seen[i] = false;
            let v = std::mem::take(&mut self.values[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// Formats a sparse vector as a signed formal sum of labelled basis elements.
pub fn format_combination(v: &[(usize, Int)], labels: &dyn Fn(usize) -> String) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(&labels(*i));
    }
    out
}
