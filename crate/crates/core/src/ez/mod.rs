//! The Alexander–Whitney map `C(A⊗B) -> C(A)⊗C(B)` and the shuffle map
//! `C(A)⊗C(B) -> C(A⊗B)`, on unnormalized chains and on normalized chains.

mod bialgebra;
mod coherence;

use std::sync::Arc;

use crate::chain::{tensor_chain, tensor_degree_maps, ChainComplex, ChainMap, ChainModel, TensorLayout};
use crate::error::{Error, Result};
use crate::linalg::{Int, Matrix};
use crate::report::VerificationReport;
use crate::simplicial::{tensor, SimplicialModule};

pub use bialgebra::{bialgebra_lhs, bialgebra_rhs, BialgebraInstance};
pub use coherence::{
    aw_colax_associativity, aw_naturality, nabla_lax_associativity, nabla_symmetry, nabla_symmetry_with,
    unit_coherence_check, unit_coherence_check_with, UnitFault,
};

/// A `(k, ℓ)`-shuffle: `alpha ∪ beta = {0..k+ℓ-1}`, both sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    /// `±1`, the parity of `#{(a, b) ∈ α×β : a > b}`.
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleTable {
    pub k: usize,
    pub l: usize,
    pub entries: Vec<Shuffle>,
}

/// All `(k, ℓ)`-shuffles, `alpha` in lexicographic order.
pub fn enumerate_shuffles(k: usize, l: usize) -> ShuffleTable {
    let n = k + l;
    let mut entries = Vec::new();
    let mut alpha = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, alpha: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
        if alpha.len() == k {
            let beta: Vec<usize> = (0..n).filter(|x| !alpha.contains(x)).collect();
            let inversions: usize = alpha.iter().map(|a| beta.iter().filter(|b| a > b).count()).sum();
            out.push(Shuffle {
                alpha: alpha.clone(),
                beta,
                sign: if inversions % 2 == 0 { 1 } else { -1 },
            });
            return;
        }
        for x in start..n {
            alpha.push(x);
            rec(x + 1, n, k, alpha, out);
            alpha.pop();
        }
    }
    rec(0, n, k, &mut alpha, &mut entries);
    ShuffleTable { k, l, entries }
}

/// Flips the sign of one shuffle, to build deliberately wrong shuffle maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleFault {
    pub k: usize,
    pub l: usize,
    pub alpha: Vec<usize>,
}

impl ShuffleFault {
    /// The `({1}, {0})` shuffle in bidegree `(1, 1)`.
    pub fn standard() -> Self {
        ShuffleFault {
            k: 1,
            l: 1,
            alpha: vec![1],
        }
    }
}

fn shuffles_with(k: usize, l: usize, fault: Option<&ShuffleFault>) -> ShuffleTable {
    let mut t = enumerate_shuffles(k, l);
    if let Some(f) = fault {
        if f.k == k && f.l == l {
            for e in &mut t.entries {
                if e.alpha == f.alpha {
                    e.sign = -e.sign;
                }
            }
        }
    }
    t
}

/// `d_fin^i: A_k -> A_{k-i}` for `i = 0..=k`, each face the last one at its
/// level.
fn last_faces(a: &SimplicialModule, k: usize) -> Vec<Matrix> {
    let mut out = vec![Matrix::identity(a.rank(k))];
    for i in 1..=k {
        let level = k - i + 1;
        let next = a.face(level, level).mul(&out[i - 1]).unwrap();
        out.push(next);
    }
    out
}

/// `d_0^j: B_k -> B_{k-j}` for `j = 0..=k`.
fn front_faces(b: &SimplicialModule, k: usize) -> Vec<Matrix> {
    let mut out = vec![Matrix::identity(b.rank(k))];
    for j in 1..=k {
        let next = b.face(k - j + 1, 0).mul(&out[j - 1]).unwrap();
        out.push(next);
    }
    out
}

/// `s_{idx[m-1]} ... s_{idx[0]}` starting at `level`; `idx[0]` acts first.
fn degeneracy_string(a: &SimplicialModule, level: usize, idx: &[usize]) -> Matrix {
    let mut acc = Matrix::identity(a.rank(level));
    for (step, &i) in idx.iter().enumerate() {
        acc = a.degeneracy(level + step, i).mul(&acc).unwrap();
    }
    acc
}

/// Unnormalized AW degree matrices into the layout of `C(A) ⊗ C(B)`.
pub(crate) fn aw_raw(a: &SimplicialModule, b: &SimplicialModule, lay: &TensorLayout) -> Vec<Matrix> {
    (0..=lay.max_degree())
        .map(|k| {
            let fa = last_faces(a, k);
            let fb = front_faces(b, k);
            let cols = a.rank(k) * b.rank(k);
            // d_fin^i a ⊗ d_0^{k-i} b sits in bidegree (k-i, i)
            let blocks = (0..=k).map(|i| (k - i, fa[i].kron(&fb[k - i]))).collect();
            lay.stack_rows(k, cols, blocks)
        })
        .collect()
}

/// Unnormalized shuffle degree matrices out of the layout of `C(A) ⊗ C(B)`.
pub(crate) fn shuffle_raw(
    a: &SimplicialModule,
    b: &SimplicialModule,
    lay: &TensorLayout,
    fault: Option<&ShuffleFault>,
) -> Vec<Matrix> {
    (0..=lay.max_degree())
        .map(|n| {
            let rows = a.rank(n) * b.rank(n);
            let mut trip: Vec<(usize, usize, Int)> = Vec::new();
            for p in 0..=n {
                let q = n - p;
                if a.rank(p) == 0 || b.rank(q) == 0 {
                    continue;
                }
                let off = lay.offset(n, p);
                for sh in shuffles_with(p, q, fault).entries {
                    let sa = degeneracy_string(a, p, &sh.beta);
                    let sb = degeneracy_string(b, q, &sh.alpha);
                    let block = sa.kron(&sb);
                    let s = Int::from(sh.sign);
                    trip.extend(block.triplets().map(|(i, j, v)| (i, off + j, &s * v)));
                }
            }
            Matrix::from_triplets(rows, lay.rank(n), trip)
        })
        .collect()
}

/// The data shared by AW and ∇ for one ordered pair of modules.
#[derive(Clone, Debug)]
pub struct EzPair {
    pub a: ChainModel,
    pub b: ChainModel,
    pub ab: ChainModel,
    /// `C(A) ⊗ C(B)` unnormalized, the target layout of the raw maps.
    raw_layout: TensorLayout,
    /// The tensor product of the model complexes.
    pub tensor: Arc<ChainComplex>,
    pub layout: TensorLayout,
}

impl EzPair {
    pub fn new(a: Arc<SimplicialModule>, b: Arc<SimplicialModule>, normalized: bool) -> Result<Self> {
        let ab = Arc::new(tensor(&a, &b)?);
        Self::with_product(a, b, ab, normalized)
    }

    /// Uses a prebuilt `A ⊗ B`; it must be the row-major tensor product.
    pub fn with_product(
        a: Arc<SimplicialModule>,
        b: Arc<SimplicialModule>,
        ab: Arc<SimplicialModule>,
        normalized: bool,
    ) -> Result<Self> {
        if a.max_degree() != b.max_degree() || ab.max_degree() != a.max_degree() {
            return Err(Error::Truncation("AW and shuffle need equal truncations".into()));
        }
        if (0..=a.max_degree()).any(|n| ab.rank(n) != a.rank(n) * b.rank(n)) {
            return Err(Error::Shape(format!("{} is not the tensor of its factors", ab.name())));
        }
        let a = ChainModel::new(a, normalized)?;
        let b = ChainModel::new(b, normalized)?;
        let ab = ChainModel::new(ab, normalized)?;
        Self::from_models(a, b, ab)
    }

    pub fn from_models(a: ChainModel, b: ChainModel, ab: ChainModel) -> Result<Self> {
        let raw_layout = TensorLayout::new(a.unnormalized.ranks(), b.unnormalized.ranks());
        let (t, layout) = tensor_chain(a.complex(), b.complex())?;
        Ok(EzPair {
            a,
            b,
            ab,
            raw_layout,
            tensor: Arc::new(t),
            layout,
        })
    }

    pub fn normalized(&self) -> bool {
        self.ab.is_normalized()
    }

    fn tensor_proj(&self) -> Vec<Matrix> {
        tensor_degree_maps(&self.a.proj(), &self.b.proj(), &self.raw_layout, &self.layout)
    }

    fn tensor_lift(&self) -> Vec<Matrix> {
        tensor_degree_maps(&self.a.lift(), &self.b.lift(), &self.layout, &self.raw_layout)
    }

    /// AW in the chosen model.
    pub fn aw(&self) -> Result<ChainMap> {
        let raw = aw_raw(&self.a.module, &self.b.module, &self.raw_layout);
        let maps = if self.normalized() {
            let p = self.tensor_proj();
            let l = self.ab.lift();
            raw.iter()
                .enumerate()
                .map(|(n, m)| p[n].mul(m)?.mul(&l[n]))
                .collect::<Result<_>>()?
        } else {
            raw
        };
        ChainMap::new(self.ab.complex().clone(), self.tensor.clone(), maps)
    }

    /// ∇ in the chosen model.
    pub fn shuffle(&self) -> Result<ChainMap> {
        self.shuffle_with(None)
    }

    pub fn shuffle_with(&self, fault: Option<&ShuffleFault>) -> Result<ChainMap> {
        let raw = shuffle_raw(&self.a.module, &self.b.module, &self.raw_layout, fault);
        let maps = if self.normalized() {
            let p = self.ab.proj();
            let l = self.tensor_lift();
            raw.iter()
                .enumerate()
                .map(|(n, m)| p[n].mul(m)?.mul(&l[n]))
                .collect::<Result<_>>()?
        } else {
            raw
        };
        ChainMap::new(self.tensor.clone(), self.ab.complex().clone(), maps)
    }

    /// For normalized pairs, checks that both maps respect the degenerate
    /// parts: `(p⊗p) ∘ AW = AW_N ∘ p` and `p ∘ ∇ = ∇_N ∘ (p⊗p)`.
    pub fn descent_report(&self) -> Result<VerificationReport> {
        let objects = vec![self.a.module.name().to_string(), self.b.module.name().to_string()];
        let d = self.raw_layout.max_degree();
        let mut report = VerificationReport::new("normalized-descent", objects, d);
        if !self.normalized() {
            return Ok(VerificationReport::skipped(
                "normalized-descent",
                report.objects,
                d,
                "pair uses unnormalized chains",
            ));
        }
        let aw_raw = aw_raw(&self.a.module, &self.b.module, &self.raw_layout);
        let nab_raw = shuffle_raw(&self.a.module, &self.b.module, &self.raw_layout, None);
        let aw_n = self.aw()?;
        let nab_n = self.shuffle()?;
        let tp = self.tensor_proj();
        let pab = self.ab.proj();
        for n in 0..=d {
            let lhs = tp[n].mul(&aw_raw[n])?;
            let rhs = aw_n.degree(n).mul(&pab[n])?;
            let src = self.ab.unnormalized.labels(n);
            let tgt = self.tensor.labels(n);
            report.compare_matrices(n, &lhs, &rhs, &|j| format!("AW on {}", src[j]), &|i| tgt[i].clone());
            let lhs = pab[n].mul(&nab_raw[n])?;
            let rhs = nab_n.degree(n).mul(&tp[n])?;
            let tgt = self.ab.complex().labels(n);
            report.compare_matrices(n, &lhs, &rhs, &|j| format!("∇ on column {j}"), &|i| tgt[i].clone());
        }
        Ok(report)
    }
}

/// AW for the pair `(A, B)`.
pub fn aw_map(a: &SimplicialModule, b: &SimplicialModule, normalized: bool) -> Result<ChainMap> {
    EzPair::new(Arc::new(a.clone()), Arc::new(b.clone()), normalized)?.aw()
}

/// ∇ for the pair `(A, B)`.
pub fn shuffle_map(a: &SimplicialModule, b: &SimplicialModule, normalized: bool) -> Result<ChainMap> {
    EzPair::new(Arc::new(a.clone()), Arc::new(b.clone()), normalized)?.shuffle()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::free_on_standard_simplex;

    fn simplex(p: usize, d: usize) -> Arc<SimplicialModule> {
        Arc::new(free_on_standard_simplex(p, d))
    }

    #[test]
    fn shuffle_counts_and_signs() {
        let t = enumerate_shuffles(0, 3);
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.entries[0].sign, 1);
        let t = enumerate_shuffles(1, 1);
        assert_eq!(t.entries[0], Shuffle { alpha: vec![0], beta: vec![1], sign: 1 });
        assert_eq!(t.entries[1], Shuffle { alpha: vec![1], beta: vec![0], sign: -1 });
        assert_eq!(enumerate_shuffles(2, 2).entries.len(), 6);
    }

    #[test]
    fn aw_level_zero_and_one() {
        let i = simplex(1, 2);
        let pair = EzPair::new(i.clone(), i.clone(), false).unwrap();
        let aw = pair.aw().unwrap();
        assert!(aw.degree(0).is_identity());
        // level 1 basis of Δ^1: [00], [01], [11]; (ι, ι) has index 1*3+1 = 4
        let col = aw.describe_column(1, 4);
        assert_eq!(col, "[0]⊗[01] + [01]⊗[1]");
        assert!(aw.check("aw").passed());
    }

    #[test]
    fn shuffle_bidegree_one_one() {
        let i = simplex(1, 2);
        let pair = EzPair::new(i.clone(), i.clone(), false).unwrap();
        let nab = pair.shuffle().unwrap();
        // ι⊗ι in bidegree (1,1): block offset of p=1 in degree 2
        let k = pair.layout.index(2, 1, 1, 1);
        let col = nab.describe_column(2, k);
        assert_eq!(col, "-[001]⊗[011] + [011]⊗[001]");
        assert!(nab.check("nabla").passed());
    }

    #[test]
    fn aw_after_shuffle() {
        let pair = EzPair::new(simplex(2, 3), simplex(1, 3), true).unwrap();
        let id = pair.aw().unwrap().after(&pair.shuffle().unwrap()).unwrap();
        assert!(id.check_identity("aw∘∇").passed());
        // degenerate terms survive without normalization
        let pair = EzPair::new(simplex(2, 3), simplex(1, 3), false).unwrap();
        let f = pair.aw().unwrap().after(&pair.shuffle().unwrap()).unwrap();
        let r = f.check_identity("aw∘∇");
        assert!(r.failed() && r.witnesses[0].level == 1);
    }

    #[test]
    fn normalized_descends() {
        let pair = EzPair::new(simplex(2, 3), simplex(1, 3), true).unwrap();
        assert!(pair.descent_report().unwrap().passed());
    }

    #[test]
    fn flipped_sign_breaks_chain_map() {
        let pair = EzPair::new(simplex(1, 3), simplex(1, 3), true).unwrap();
        let bad = pair.shuffle_with(Some(&ShuffleFault::standard())).unwrap();
        // the flipped term is degenerate after AW, so AW∘∇ cannot see it
        let id = pair.aw().unwrap().after(&bad).unwrap();
        assert!(id.check_identity("aw∘∇").passed());
        let r = bad.check("nabla");
        assert!(r.failed());
        assert_eq!(r.witnesses[0].level, 2);
    }
}
