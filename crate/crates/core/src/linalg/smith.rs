//! Smith normal form over the integers.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Int, Matrix};
use crate::error::{Error, Result};

/// `U * M * V = S` with `S` diagonal, `d_1 | d_2 | ...`, and `U`, `V`
/// unimodular. The inverses are tracked alongside so unimodularity is
/// witnessed rather than assumed.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub s: Matrix,
    pub v: Matrix,
    pub u_inv: Matrix,
    pub v_inv: Matrix,
    /// Nonzero diagonal entries of `S`, all positive.
    pub invariant_factors: Vec<Int>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Re-checks every defining property against the original matrix.
    pub fn verify(&self, m: &Matrix) -> Result<()> {
        let prod = self.u.mul(m)?.mul(&self.v)?;
        if prod != self.s {
            return Err(Error::Construction("U*M*V != S".into()));
        }
        if !self.u.mul(&self.u_inv)?.is_identity() || !self.v.mul(&self.v_inv)?.is_identity() {
            return Err(Error::Construction("U or V not unimodular".into()));
        }
        for (k, d) in self.invariant_factors.iter().enumerate() {
            if !d.is_positive() || self.s.get(k, k) != *d {
                return Err(Error::Construction("bad diagonal".into()));
            }
            if k > 0 && !d.is_multiple_of(&self.invariant_factors[k - 1]) {
                return Err(Error::Construction("divisibility chain broken".into()));
            }
        }
        let off_diag = self.s.triplets().any(|(i, j, _)| i != j);
        if off_diag || self.s.nnz() != self.rank() {
            return Err(Error::Construction("S is not diagonal".into()));
        }
        Ok(())
    }
}

struct Work {
    a: Vec<Vec<Int>>,
    u: Vec<Vec<Int>>,
    u_inv: Vec<Vec<Int>>,
    v: Vec<Vec<Int>>,
    v_inv: Vec<Vec<Int>>,
}

fn dense_identity(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in &mut self.u_inv {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        // inverse: col_j -= c * col_i
        for row in &mut self.u_inv {
            if !row[i].is_zero() {
                let t = c * &row[i];
                row[j] -= t;
            }
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                if !row[j].is_zero() {
                    let t = c * &row[j];
                    row[i] += t;
                }
            }
        }
        // inverse: row_j -= c * row_i
        let src = self.v_inv[i].clone();
        for (x, y) in self.v_inv[j].iter_mut().zip(&src) {
            if !y.is_zero() {
                *x -= c * y;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
        for row in &mut self.u_inv {
            row[i] = -&row[i];
        }
    }
}

/// Smith normal form with smallest-absolute-value pivoting.
pub fn smith_normal_form(m: &Matrix) -> SmithDecomposition {
    let (rows, cols) = m.shape();
    let mut w = Work {
        a: m.to_dense(),
        u: dense_identity(rows),
        u_inv: dense_identity(rows),
        v: dense_identity(cols),
        v_inv: dense_identity(cols),
    };
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&w.a, t) else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.a[t][t].clone();
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&p);
                    w.add_row(i, t, &-q);
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&p);
                    w.add_col(j, t, &-q);
                }
            }
            let col_clear = (t + 1..rows).all(|i| w.a[i][t].is_zero());
            let row_clear = (t + 1..cols).all(|j| w.a[t][j].is_zero());
            if !(col_clear && row_clear) {
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&p))
            });
            match bad_row {
                Some(i) => w.add_row(t, i, &Int::one()),
                None => break,
            }
        }
        if w.a[t][t].is_zero() {
            break;
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        factors.push(w.a[t][t].clone());
    }
    SmithDecomposition {
        u: Matrix::from_dense(rows, rows, &w.u),
        s: Matrix::from_dense(rows, cols, &w.a),
        v: Matrix::from_dense(cols, cols, &w.v),
        u_inv: Matrix::from_dense(rows, rows, &w.u_inv),
        v_inv: Matrix::from_dense(cols, cols, &w.v_inv),
        invariant_factors: factors,
    }
}

fn min_pivot(a: &[Vec<Int>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, Int)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if ax.is_one() {
                return Some((i, j));
            }
            if best.as_ref().map_or(true, |(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> SmithDecomposition {
        let m = Matrix::from_rows(rows);
        let d = smith_normal_form(&m);
        d.verify(&m).expect("decomposition invariants");
        d
    }

    #[test]
    fn zero_matrix() {
        let d = snf(&[vec![0, 0], vec![0, 0]]);
        assert!(d.s.is_zero());
        assert!(d.u.is_identity() && d.v.is_identity());
    }

    #[test]
    fn two_four_six_eight() {
        // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4.
        let d = snf(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(d.invariant_factors, vec![Int::from(2), Int::from(4)]);
    }

    #[test]
    fn identity_is_fixed() {
        let d = snf(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(d.s.is_identity());
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) has factors 1, 6
        let d = snf(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(d.invariant_factors, vec![Int::from(1), Int::from(6)]);
    }

    #[test]
    fn rectangular_and_empty() {
        let d = snf(&[vec![2, 3, 4]]);
        assert_eq!(d.invariant_factors, vec![Int::from(1)]);
        let e = smith_normal_form(&Matrix::zeros(0, 3));
        assert_eq!(e.rank(), 0);
        e.verify(&Matrix::zeros(0, 3)).unwrap();
    }
}
