//! Exact integer linear systems, kernels and inverses.
//!
//! Elimination first pivots on entries equal to `±1`. Those steps are
//! unimodular, so the reduced system has exactly the integer solutions of the
//! original. Whatever is left without a unit pivot is handed to the dense
//! Smith normal form. The chain-level systems met here are overwhelmingly
//! `0/±1`, so the dense remainder stays tiny.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Int, Matrix, SparseVec};
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

type Row = BTreeMap<usize, Int>;

struct Elimination {
    cols: usize,
    /// Pivot steps in order: (frozen row, its right-hand sides, pivot column).
    pivots: Vec<(Row, Row, usize)>,
    /// Remaining rows with at least one coefficient.
    rest: Vec<(Row, Row)>,
    /// Right-hand sides of rows whose coefficients all cancelled.
    empty_rhs: Vec<Row>,
    pivot_cols: BTreeSet<usize>,
}

fn eliminate(a: &Matrix, rhs: &Matrix) -> Elimination {
    let (m, n) = a.shape();
    let mut rows: Vec<Option<(Row, Row)>> = (0..m).map(|_| Some((Row::new(), Row::new()))).collect();
    for (i, j, v) in a.triplets() {
        rows[i].as_mut().unwrap().0.insert(j, v.clone());
    }
    for (i, j, v) in rhs.triplets() {
        rows[i].as_mut().unwrap().1.insert(j, v.clone());
    }
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (i, j, _) in a.triplets() {
        col_rows[j].insert(i);
    }
    let mut pivots = Vec::new();
    let mut pivot_cols = BTreeSet::new();
    // candidate columns keyed by their current number of active rows
    let mut queue: BTreeSet<(usize, usize)> = (0..n)
        .filter(|&j| !col_rows[j].is_empty())
        .map(|j| (col_rows[j].len(), j))
        .collect();
    let mut queued: Vec<Option<usize>> = (0..n)
        .map(|j| (!col_rows[j].is_empty()).then(|| col_rows[j].len()))
        .collect();

    fn requeue(
        j: usize,
        col_rows: &[BTreeSet<usize>],
        queue: &mut BTreeSet<(usize, usize)>,
        queued: &mut [Option<usize>],
    ) {
        if let Some(c) = queued[j].take() {
            queue.remove(&(c, j));
        }
        let c = col_rows[j].len();
        if c > 0 {
            queue.insert((c, j));
            queued[j] = Some(c);
        }
    }

    while let Some((_, j)) = queue.pop_first() {
        queued[j] = None;
        let best = col_rows[j]
            .iter()
            .filter(|&&i| rows[i].as_ref().unwrap().0[&j].abs().is_one())
            .min_by_key(|&&i| (rows[i].as_ref().unwrap().0.len(), i))
            .copied();
        // no unit entry: the column stays out of the queue until a row touching it changes
        let Some(pr) = best else {
            continue;
        };
        let pc = j;
        let (prow, prhs) = rows[pr].take().unwrap();
        for &k in prow.keys() {
            col_rows[k].remove(&pr);
        }
        let pval = prow[&pc].clone();
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        let mut touched: BTreeSet<usize> = prow.keys().copied().collect();
        for i in targets {
            let (row, r) = rows[i].as_mut().unwrap();
            // row_i -= (a_ic / pval) * prow; pval is a unit so this is exact
            let factor = &row[&pc] * &pval;
            for (&k, v) in &prow {
                let e = row.entry(k).or_insert_with(Int::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    row.remove(&k);
                    col_rows[k].remove(&i);
                } else {
                    col_rows[k].insert(i);
                }
            }
            for (&k, v) in &prhs {
                let e = r.entry(k).or_insert_with(Int::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    r.remove(&k);
                }
            }
            touched.extend(row.keys().copied());
        }
        pivot_cols.insert(pc);
        touched.remove(&pc);
        for k in touched {
            if !pivot_cols.contains(&k) {
                requeue(k, &col_rows, &mut queue, &mut queued);
            }
        }
        pivots.push((prow, prhs, pc));
    }
    let (rest, empty): (Vec<_>, Vec<_>) = rows.into_iter().flatten().partition(|(row, _)| !row.is_empty());
    Elimination {
        cols: n,
        pivots,
        rest,
        empty_rhs: empty.into_iter().map(|(_, r)| r).collect(),
        pivot_cols,
    }
}

impl Elimination {
    /// Columns that still appear in the non-pivot rows.
    fn remainder_cols(&self) -> Vec<usize> {
        let mut set = BTreeSet::new();
        for (row, _) in &self.rest {
            set.extend(row.keys().copied());
        }
        set.into_iter().collect()
    }

    fn remainder_matrix(&self, cols: &[usize]) -> Matrix {
        let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let pos = &pos;
        let trip = self.rest.iter().enumerate().flat_map(|(i, (row, _))| {
            row.iter().map(move |(j, v)| (i, pos[j], v.clone()))
        });
        Matrix::from_triplets(self.rest.len(), cols.len(), trip.collect::<Vec<_>>())
    }

    /// Back substitution through the frozen pivot rows. `x` holds the values
    /// already fixed for non-pivot columns; `k` selects the right-hand side.
    fn back_substitute(&self, x: &mut BTreeMap<usize, Int>, k: Option<usize>) {
        for (row, r, pc) in self.pivots.iter().rev() {
            let mut acc = match k {
                Some(k) => r.get(&k).cloned().unwrap_or_else(Int::zero),
                None => Int::zero(),
            };
            for (j, v) in row {
                if j != pc {
                    if let Some(xj) = x.get(j) {
                        acc -= v * xj;
                    }
                }
            }
            // divide by the unit pivot
            let val = acc * &row[pc];
            if !val.is_zero() {
                x.insert(*pc, val);
            }
        }
    }
}

/// Solves `A X = B` column by column over the integers. Returns `None` when
/// some column has no integer solution. Every returned solution has been
/// re-verified by substitution.
pub fn solve_many(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "system has {} rows but right-hand side has {}",
            a.rows(),
            b.rows()
        )));
    }
    let el = eliminate(a, b);
    let rem_cols = el.remainder_cols();
    let rem = el.remainder_matrix(&rem_cols);
    let snf = smith_normal_form(&rem);
    let rank = snf.rank();
    let mut columns: Vec<SparseVec> = Vec::with_capacity(b.cols());
    for k in 0..b.cols() {
        if el.empty_rhs.iter().any(|r| r.contains_key(&k)) {
            return Ok(None);
        }
        // right-hand side restricted to the remainder rows
        let rhs: SparseVec = el
            .rest
            .iter()
            .enumerate()
            .filter_map(|(i, (_, r))| r.get(&k).map(|v| (i, v.clone())))
            .collect();
        let c = snf.u.apply(&rhs);
        let mut z: SparseVec = Vec::new();
        for (i, v) in &c {
            if *i >= rank {
                return Ok(None);
            }
            let d = &snf.invariant_factors[*i];
            let (q, r) = v.div_rem(d);
            if !r.is_zero() {
                return Ok(None);
            }
            z.push((*i, q));
        }
        let y = snf.v.apply(&z);
        let mut x: BTreeMap<usize, Int> = y.into_iter().map(|(i, v)| (rem_cols[i], v)).collect();
        el.back_substitute(&mut x, Some(k));
        columns.push(x.into_iter().collect());
    }
    let sol = Matrix::from_columns(el.cols, columns);
    if a.mul(&sol)? != *b {
        return Err(Error::Construction("integer solution failed substitution check".into()));
    }
    Ok(Some(sol))
}

/// Solves `A x = b` over the integers.
pub fn solve_integer_system(a: &Matrix, b: &[Int]) -> Result<Option<Vec<Int>>> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!(
            "right-hand side has length {}, expected {}",
            b.len(),
            a.rows()
        )));
    }
    let col: SparseVec = b
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect();
    let rhs = Matrix::from_columns(a.rows(), vec![col]);
    Ok(solve_many(a, &rhs)?.map(|x| {
        let mut out = vec![Int::zero(); a.cols()];
        for (i, v) in x.column(0) {
            out[*i] = v.clone();
        }
        out
    }))
}

/// A basis of the integer kernel of `A`, as the columns of the result. The
/// basis spans every integer vector in the kernel, not just a finite-index
/// sublattice.
pub fn kernel_basis(a: &Matrix) -> Matrix {
    let el = eliminate(a, &Matrix::zeros(a.rows(), 0));
    let rem_cols = el.remainder_cols();
    let rem = el.remainder_matrix(&rem_cols);
    let snf = smith_normal_form(&rem);
    let mut vectors: Vec<BTreeMap<usize, Int>> = Vec::new();
    for k in snf.rank()..rem_cols.len() {
        vectors.push(
            snf.v
                .column(k)
                .iter()
                .map(|(i, v)| (rem_cols[*i], v.clone()))
                .collect(),
        );
    }
    let in_rem: BTreeSet<usize> = rem_cols.iter().copied().collect();
    for j in 0..el.cols {
        if !el.pivot_cols.contains(&j) && !in_rem.contains(&j) {
            vectors.push(BTreeMap::from([(j, Int::one())]));
        }
    }
    let columns = vectors
        .into_iter()
        .map(|mut x| {
            el.back_substitute(&mut x, None);
            x.into_iter().collect()
        })
        .collect();
    let mut basis = Matrix::from_columns(a.cols(), columns);
    // free columns first in index order keeps bases deterministic and readable
    let order = canonical_order(&basis);
    basis = basis.select_columns(&order);
    basis
}

fn canonical_order(basis: &Matrix) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..basis.cols()).collect();
    idx.sort_by_key(|&j| basis.column(j).last().map(|(i, _)| *i));
    idx
}

/// Exact inverse of a square integer matrix, or an error when it is not
/// unimodular.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    if a.rows() != a.cols() {
        return Err(Error::Shape(format!("inverse of non-square {}x{}", a.rows(), a.cols())));
    }
    let inv = solve_many(a, &Matrix::identity(a.rows()))?
        .ok_or_else(|| Error::NotInvertible(format!("{}x{} matrix", a.rows(), a.cols())))?;
    if !inv.mul(a)?.is_identity() {
        return Err(Error::NotInvertible("left inverse check failed".into()));
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn identity_system() {
        let a = Matrix::identity(3);
        let x = solve_integer_system(&a, &ints(&[4, -1, 7])).unwrap().unwrap();
        assert_eq!(x, ints(&[4, -1, 7]));
    }

    #[test]
    fn parity_obstruction() {
        let a = Matrix::from_rows(&[vec![2]]);
        assert_eq!(solve_integer_system(&a, &ints(&[3])).unwrap(), None);
    }

    #[test]
    fn bezout() {
        let a = Matrix::from_rows(&[vec![2, 3]]);
        let x = solve_integer_system(&a, &ints(&[1])).unwrap().unwrap();
        assert_eq!(&x[0] * 2 + &x[1] * 3, Int::one());
    }

    #[test]
    fn kernel_of_boundary_is_saturated() {
        // [2, 4] has kernel spanned by (2, -1), not (4, -2)
        let a = Matrix::from_rows(&[vec![2, 4]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).unwrap().is_zero());
        let g = k.column(0).iter().fold(Int::zero(), |g, (_, v)| g.gcd(v));
        assert!(g.is_one());
    }

    #[test]
    fn kernel_mixes_unit_and_remainder_parts() {
        let a = Matrix::from_rows(&[vec![1, 1, 0, 0], vec![0, 0, 2, 4]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn inverse_of_unimodular() {
        let a = Matrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&a).unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inverse(&Matrix::from_rows(&[vec![2]])).is_err());
    }
}
