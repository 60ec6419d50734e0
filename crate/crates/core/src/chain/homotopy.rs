//! Chain homotopies found by solving one global integer system.

use std::fmt::Write as _;

use super::{defect_report, homotopy_defect, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::{solve_integer_system, Int, Matrix};
use crate::report::VerificationReport;
use crate::simplicial::write_matrix;

/// `h_n: S_n -> T_{n+1}` with `d h + h d = f - g` on degrees `0..=valid`.
#[derive(Clone, Debug)]
pub struct ChainHomotopy {
    pub f: ChainMap,
    pub g: ChainMap,
    pub h: Vec<Matrix>,
}

impl ChainHomotopy {
    pub fn valid(&self) -> usize {
        self.h.len() - 1
    }

    /// Recomputes the defect `(f - g) - (dh + hd)` and reports nonzero
    /// entries.
    pub fn verify(&self) -> Result<VerificationReport> {
        let defects = homotopy_defect(&self.f, &self.g, &self.h, self.valid())?;
        Ok(defect_report("homotopy-defect", &self.f, &defects))
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for (n, m) in self.h.iter().enumerate() {
            let _ = writeln!(s, "h {n}");
            write_matrix(&mut s, m);
        }
        s
    }
}

/// Looks for an integer homotopy between `f` and `g` on the degrees where
/// both are trusted, minus the top one. `None` means no integer solution
/// exists.
pub fn solve_homotopy(f: &ChainMap, g: &ChainMap) -> Result<Option<ChainHomotopy>> {
    if f.source().ranks() != g.source().ranks() || f.target().ranks() != g.target().ranks() {
        return Err(Error::Composition("homotopy between maps with different endpoints".into()));
    }
    let top = f.valid().min(g.valid()).min(f.target().max_degree());
    if top == 0 {
        return Err(Error::Range { degree: 0, valid: 0 });
    }
    let valid = top - 1;
    let src = f.source();
    let tgt = f.target();
    // unknowns: h_n stored column-major, n = 0..=valid
    let mut var_base = Vec::with_capacity(valid + 2);
    let mut acc = 0;
    for n in 0..=valid {
        var_base.push(acc);
        acc += tgt.rank(n + 1) * src.rank(n);
    }
    let n_vars = acc;
    let var = |n: usize, i: usize, j: usize| var_base[n] + j * tgt.rank(n + 1) + i;
    let mut eq_base = Vec::with_capacity(valid + 1);
    let mut acc = 0;
    for n in 0..=valid {
        eq_base.push(acc);
        acc += tgt.rank(n) * src.rank(n);
    }
    let n_eqs = acc;
    let mut trip: Vec<(usize, usize, Int)> = Vec::new();
    let mut rhs = vec![Int::from(0); n_eqs];
    for n in 0..=valid {
        let tn = tgt.rank(n);
        let row = |i: usize, j: usize| eq_base[n] + j * tn + i;
        // d_{n+1} h_n
        for (i, k, v) in tgt.differential(n + 1).triplets() {
            for j in 0..src.rank(n) {
                trip.push((row(i, j), var(n, k, j), v.clone()));
            }
        }
        // h_{n-1} d_n
        if n > 0 {
            for (k, j, v) in src.differential(n).triplets() {
                for i in 0..tn {
                    trip.push((row(i, j), var(n - 1, i, k), v.clone()));
                }
            }
        }
        let diff = f.degree(n).sub(g.degree(n))?;
        for (i, j, v) in diff.triplets() {
            rhs[row(i, j)] = v.clone();
        }
    }
    let system = Matrix::from_triplets(n_eqs, n_vars, trip);
    let Some(x) = solve_integer_system(&system, &rhs)? else {
        return Ok(None);
    };
    let h = (0..=valid)
        .map(|n| {
            let (rows, cols) = (tgt.rank(n + 1), src.rank(n));
            let entries = (0..cols).flat_map(|j| (0..rows).map(move |i| (i, j))).filter_map(|(i, j)| {
                let v = &x[var(n, i, j)];
                (*v != Int::from(0)).then(|| (i, j, v.clone()))
            });
            Matrix::from_triplets(rows, cols, entries.collect::<Vec<_>>())
        })
        .collect();
    let out = ChainHomotopy {
        f: f.restricted(valid),
        g: g.restricted(valid),
        h,
    };
    if !out.verify()?.passed() {
        return Err(Error::Construction("solved homotopy fails substitution".into()));
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::chain::ChainComplex;

    #[test]
    fn equal_maps_zero_homotopy() {
        let c = Arc::new(
            ChainComplex::new("i", vec![2, 1, 0], vec![Matrix::from_rows(&[vec![-1], vec![1]]), Matrix::zeros(1, 0)])
                .unwrap(),
        );
        let id = ChainMap::identity(c);
        let h = solve_homotopy(&id, &id).unwrap().unwrap();
        assert!(h.h.iter().all(Matrix::is_zero));
    }

    #[test]
    fn nonzero_homology_blocks_homotopy() {
        let c = Arc::new(ChainComplex::new("z", vec![1, 0, 0], vec![Matrix::zeros(1, 0), Matrix::zeros(0, 0)]).unwrap());
        let id = ChainMap::identity(c.clone());
        let zero = ChainMap::zero(c.clone(), c);
        assert!(solve_homotopy(&id, &zero).unwrap().is_none());
    }

    #[test]
    fn contractible_cone() {
        // 0 -> Z --1--> Z -> 0 is contractible: id ≃ 0
        let c = Arc::new(
            ChainComplex::new("cone", vec![1, 1, 0], vec![Matrix::from_rows(&[vec![1]]), Matrix::zeros(1, 0)]).unwrap(),
        );
        let id = ChainMap::identity(c.clone());
        let zero = ChainMap::zero(c.clone(), c);
        let h = solve_homotopy(&id, &zero).unwrap().unwrap();
        assert!(h.verify().unwrap().passed());
        assert_eq!(h.h[0].get(0, 0), Int::from(1));
    }
}
