//! Tensor products of chain complexes with Koszul signs.

use std::sync::Arc;

use super::{sign, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::{Int, Matrix};

/// Basis bookkeeping for `(C ⊗ D)_n = ⊕_{p+q=n} C_p ⊗ D_q`, blocks in
/// ascending `p`, each block row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLayout {
    left: Vec<usize>,
    right: Vec<usize>,
    /// `offsets[n][p]` is the start of block `(p, n-p)`; one extra entry
    /// holds the total rank.
    offsets: Vec<Vec<usize>>,
}

impl TensorLayout {
    pub fn new(left: &[usize], right: &[usize]) -> Self {
        let d = left.len().min(right.len()) - 1;
        let offsets = (0..=d)
            .map(|n| {
                let mut o = Vec::with_capacity(n + 2);
                let mut acc = 0;
                for p in 0..=n {
                    o.push(acc);
                    acc += left[p] * right[n - p];
                }
                o.push(acc);
                o
            })
            .collect();
        TensorLayout {
            left: left[..=d].to_vec(),
            right: right[..=d].to_vec(),
            offsets,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.offsets[n][n + 1]
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.max_degree()).map(|n| self.rank(n)).collect()
    }

    pub fn offset(&self, n: usize, p: usize) -> usize {
        self.offsets[n][p]
    }

    pub fn left_rank(&self, p: usize) -> usize {
        self.left[p]
    }

    pub fn right_rank(&self, q: usize) -> usize {
        self.right[q]
    }

    /// Index of `x_i ⊗ y_j` with `|x| = p` in degree `n`.
    pub fn index(&self, n: usize, p: usize, i: usize, j: usize) -> usize {
        self.offsets[n][p] + i * self.right[n - p] + j
    }

    /// Inverse of [`TensorLayout::index`]: `(p, i, j)`.
    pub fn decode(&self, n: usize, k: usize) -> (usize, usize, usize) {
        let o = &self.offsets[n];
        let p = o.partition_point(|&x| x <= k) - 1;
        let r = self.right[n - p];
        let local = k - o[p];
        (p, local / r, local % r)
    }

    /// Assembles a degree-`n` map into this layout from its blocks
    /// `(p, matrix into block p)`.
    pub fn stack_rows(&self, n: usize, cols: usize, blocks: Vec<(usize, Matrix)>) -> Matrix {
        let mut trip = Vec::new();
        for (p, m) in blocks {
            let off = self.offsets[n][p];
            trip.extend(m.triplets().map(|(i, j, v)| (off + i, j, v.clone())));
        }
        Matrix::from_triplets(self.rank(n), cols, trip)
    }

    /// The sub-block of columns belonging to bidegree `(p, n-p)`.
    pub fn block_columns(&self, m: &Matrix, n: usize, p: usize) -> Matrix {
        let cols: Vec<usize> = (self.offsets[n][p]..self.offsets[n][p + 1]).collect();
        m.select_columns(&cols)
    }
}

/// `C1 ⊗ C2` with `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`.
pub fn tensor_chain(c1: &ChainComplex, c2: &ChainComplex) -> Result<(ChainComplex, TensorLayout)> {
    if c1.max_degree() != c2.max_degree() {
        return Err(Error::Truncation(format!(
            "{} has max degree {} but {} has {}",
            c1.name(),
            c1.max_degree(),
            c2.name(),
            c2.max_degree()
        )));
    }
    let lay = TensorLayout::new(c1.ranks(), c2.ranks());
    let d = lay.max_degree();
    let mut diffs = Vec::with_capacity(d);
    for n in 1..=d {
        let mut trip: Vec<(usize, usize, Int)> = Vec::new();
        for p in 0..=n {
            let q = n - p;
            let (r1, r2) = (c1.rank(p), c2.rank(q));
            if r1 == 0 || r2 == 0 {
                continue;
            }
            if p > 0 {
                // dx ⊗ y into block (p-1, q) of degree n-1
                let dx = c1.differential(p);
                for (a, i, v) in dx.triplets() {
                    for j in 0..r2 {
                        trip.push((lay.index(n - 1, p - 1, a, j), lay.index(n, p, i, j), v.clone()));
                    }
                }
            }
            if q > 0 {
                let dy = c2.differential(q);
                let s = sign(p);
                for i in 0..r1 {
                    for (b, j, v) in dy.triplets() {
                        trip.push((lay.index(n - 1, p, i, b), lay.index(n, p, i, j), &s * v));
                    }
                }
            }
        }
        diffs.push(Matrix::from_triplets(lay.rank(n - 1), lay.rank(n), trip));
    }
    let labels = (0..=d)
        .map(|n| {
            (0..lay.rank(n))
                .map(|k| {
                    let (p, i, j) = lay.decode(n, k);
                    format!("{}⊗{}", c1.label(p, i), c2.label(n - p, j))
                })
                .collect()
        })
        .collect();
    let name = format!("({} ⊗ {})", c1.name(), c2.name());
    let c = ChainComplex::with_labels(name, lay.ranks(), diffs, Some(labels))?;
    Ok((c, lay))
}

impl ChainMap {
    /// `f ⊗ g: S1 ⊗ S2 -> T1 ⊗ T2`, no signs since both have degree 0.
    pub fn tensor(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        let (s, sl) = tensor_chain(f.source(), g.source())?;
        let (t, tl) = tensor_chain(f.target(), g.target())?;
        ChainMap::tensor_between(f, g, Arc::new(s), &sl, Arc::new(t), &tl)
    }

    /// Like [`ChainMap::tensor`] with the tensor complexes supplied.
    pub fn tensor_between(
        f: &ChainMap,
        g: &ChainMap,
        source: Arc<ChainComplex>,
        sl: &TensorLayout,
        target: Arc<ChainComplex>,
        tl: &TensorLayout,
    ) -> Result<ChainMap> {
        let top = f.valid().min(g.valid()).min(sl.max_degree()).min(tl.max_degree());
        let maps = tensor_degree_maps(&f.maps()[..=top], &g.maps()[..=top], sl, tl);
        ChainMap::new(source, target, maps)
    }
}

/// Degreewise `f ⊗ g` for graded maps that need not be chain maps, e.g.
/// sections of a projection.
pub fn tensor_degree_maps(f: &[Matrix], g: &[Matrix], sl: &TensorLayout, tl: &TensorLayout) -> Vec<Matrix> {
    let top = f.len().min(g.len()) - 1;
    (0..=top)
        .map(|n| {
            let mut trip = Vec::new();
            for p in 0..=n {
                let block = f[p].kron(&g[n - p]);
                let (ro, co) = (tl.offset(n, p), sl.offset(n, p));
                trip.extend(block.triplets().map(|(i, j, v)| (ro + i, co + j, v.clone())));
            }
            Matrix::from_triplets(tl.rank(n), sl.rank(n), trip)
        })
        .collect()
}

/// The symmetry `x⊗y ↦ (-1)^{pq} y⊗x`.
pub fn koszul_swap(c1: &ChainComplex, c2: &ChainComplex) -> Result<ChainMap> {
    koszul_swap_with(c1, c2, &|p, q| p * q)
}

/// The swap with an arbitrary sign exponent; only `p*q` gives a chain map.
pub fn koszul_swap_with(
    c1: &ChainComplex,
    c2: &ChainComplex,
    exponent: &dyn Fn(usize, usize) -> usize,
) -> Result<ChainMap> {
    let (s, sl) = tensor_chain(c1, c2)?;
    let (t, tl) = tensor_chain(c2, c1)?;
    let maps = (0..=sl.max_degree())
        .map(|n| {
            let mut trip = Vec::with_capacity(sl.rank(n));
            for k in 0..sl.rank(n) {
                let (p, i, j) = sl.decode(n, k);
                let q = n - p;
                trip.push((tl.index(n, q, j, i), k, sign(exponent(p, q))));
            }
            Matrix::from_triplets(tl.rank(n), sl.rank(n), trip)
        })
        .collect();
    ChainMap::new(Arc::new(s), Arc::new(t), maps)
}

/// `(A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C)`, sign-free.
pub fn associator(a: &ChainComplex, b: &ChainComplex, c: &ChainComplex) -> Result<ChainMap> {
    let (ab, ab_l) = tensor_chain(a, b)?;
    let (bc, bc_l) = tensor_chain(b, c)?;
    let (s, sl) = tensor_chain(&ab, c)?;
    let (t, tl) = tensor_chain(a, &bc)?;
    let maps = (0..=sl.max_degree())
        .map(|n| {
            let mut trip = Vec::with_capacity(sl.rank(n));
            for k in 0..sl.rank(n) {
                let (m, u, z) = sl.decode(n, k);
                let (p, x, y) = ab_l.decode(m, u);
                let q = m - p;
                let r = n - m;
                let inner = bc_l.index(q + r, q, y, z);
                trip.push((tl.index(n, p, x, inner), k, Int::from(1)));
            }
            Matrix::from_triplets(tl.rank(n), sl.rank(n), trip)
        })
        .collect();
    ChainMap::new(Arc::new(s), Arc::new(t), maps)
}

/// `(A ⊗ B) ⊗ (C ⊗ D) -> (A ⊗ C) ⊗ (B ⊗ D)`, `a⊗b⊗c⊗d ↦ (-1)^{|b||c|} a⊗c⊗b⊗d`.
pub fn middle_swap(a: &ChainComplex, b: &ChainComplex, c: &ChainComplex, d: &ChainComplex) -> Result<ChainMap> {
    let (ab, ab_l) = tensor_chain(a, b)?;
    let (cd, cd_l) = tensor_chain(c, d)?;
    let (ac, ac_l) = tensor_chain(a, c)?;
    let (bd, bd_l) = tensor_chain(b, d)?;
    let (s, sl) = tensor_chain(&ab, &cd)?;
    let (t, tl) = tensor_chain(&ac, &bd)?;
    let maps = (0..=sl.max_degree())
        .map(|n| {
            let mut trip = Vec::with_capacity(sl.rank(n));
            for k in 0..sl.rank(n) {
                let (m, u, v) = sl.decode(n, k);
                let (pa, ia, ib) = ab_l.decode(m, u);
                let pb = m - pa;
                let (pc, ic, id) = cd_l.decode(n - m, v);
                let pd = n - m - pc;
                let left = ac_l.index(pa + pc, pa, ia, ic);
                let right = bd_l.index(pb + pd, pb, ib, id);
                let row = tl.index(n, pa + pc, left, right);
                trip.push((row, k, sign(pb * pc)));
            }
            Matrix::from_triplets(tl.rank(n), sl.rank(n), trip)
        })
        .collect();
    ChainMap::new(Arc::new(s), Arc::new(t), maps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone() -> ChainComplex {
        // 0 -> Z --2--> Z -> 0
        ChainComplex::new("cone", vec![1, 1, 0], vec![Matrix::from_rows(&[vec![2]]), Matrix::zeros(1, 0)]).unwrap()
    }

    fn interval() -> ChainComplex {
        ChainComplex::new(
            "I",
            vec![2, 1, 0],
            vec![Matrix::from_rows(&[vec![-1], vec![1]]), Matrix::zeros(1, 0)],
        )
        .unwrap()
    }

    #[test]
    fn unit_tensor() {
        let c = cone();
        let (t, _) = tensor_chain(&c, &ChainComplex::unit(2)).unwrap();
        assert_eq!(t.ranks(), c.ranks());
        assert_eq!(t.differential(1), c.differential(1));
    }

    #[test]
    fn ranks_of_interval_square() {
        let (t, lay) = tensor_chain(&interval(), &interval()).unwrap();
        assert_eq!(t.ranks(), &[4, 4, 1]);
        assert_eq!(lay.decode(1, 2), (1, 0, 0));
        assert_eq!(lay.decode(1, 1), (0, 1, 0));
    }

    #[test]
    fn koszul_signs_and_involution() {
        let i = interval();
        let s = koszul_swap(&i, &i).unwrap();
        assert!(s.check("swap").passed());
        assert_eq!(s.degree(2).get(0, 0), Int::from(-1));
        let back = koszul_swap(&i, &i).unwrap();
        let id = back.after(&s).unwrap();
        assert!(id.maps().iter().all(Matrix::is_identity));
    }

    #[test]
    fn wrong_exponent_breaks_chain_map() {
        let i = interval();
        let s = koszul_swap_with(&i, &i, &|_, _| 0).unwrap();
        assert!(s.check("swap").failed());
    }

    #[test]
    fn associator_is_chain_iso() {
        let i = interval();
        let c = cone();
        let a = associator(&i, &c, &i).unwrap();
        assert!(a.check("assoc").passed());
        assert!(a.maps().iter().all(Matrix::is_basis_map));
    }

    #[test]
    fn middle_swap_is_chain_map() {
        let i = interval();
        let c = cone();
        let m = middle_swap(&i, &c, &i, &c).unwrap();
        assert!(m.check("mid").passed());
    }
}
