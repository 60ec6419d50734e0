//! Non-negatively graded integer chain complexes, chain maps and
//! homotopies, all truncated at a top degree.
//!
//! Degrees are homological: `d_n: C_n -> C_{n-1}`. A complex of max degree
//! `D` stores `C_0..=C_D`; a map carries the top degree up to which it is
//! trustworthy.

mod homology;
mod homotopy;
mod normalize;
mod tensor;

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{format_combination, Int, Matrix};
use crate::report::{VerificationReport, Witness};
use crate::simplicial::write_matrix;

pub use homology::{homology, induced_map_on_homology, HomologyGroup, InducedMap};
pub use homotopy::{solve_homotopy, ChainHomotopy};
pub use normalize::{
    moore_model, normalized_chains, quotient_model, unnormalized_chains, ChainModel, MooreModel,
    NormalizedChains, QuotientModel,
};
pub(crate) use normalize::merge;
pub use tensor::{
    associator, koszul_swap, koszul_swap_with, middle_swap, tensor_chain, tensor_degree_maps, TensorLayout,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    name: String,
    ranks: Vec<usize>,
    /// `diffs[n] = d_n`; `diffs[0]` is the empty map out of degree 0.
    diffs: Vec<Matrix>,
    labels: Vec<Vec<String>>,
}

impl ChainComplex {
    /// `diffs[k]` is `d_{k+1}: C_{k+1} -> C_k`. Shapes and `d∘d = 0` are
    /// checked.
    pub fn new(name: impl Into<String>, ranks: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        Self::with_labels(name, ranks, diffs, None)
    }

    pub fn with_labels(
        name: impl Into<String>,
        ranks: Vec<usize>,
        diffs: Vec<Matrix>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        let name = name.into();
        if ranks.is_empty() {
            return Err(Error::Construction("a chain complex needs degree 0".into()));
        }
        if diffs.len() + 1 != ranks.len() {
            return Err(Error::Shape(format!(
                "{} ranks need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                diffs.len()
            )));
        }
        let mut all = vec![Matrix::zeros(0, ranks[0])];
        for (k, d) in diffs.into_iter().enumerate() {
            if d.shape() != (ranks[k], ranks[k + 1]) {
                return Err(Error::Shape(format!(
                    "d_{} has shape {:?}, expected {:?}",
                    k + 1,
                    d.shape(),
                    (ranks[k], ranks[k + 1])
                )));
            }
            all.push(d);
        }
        for n in 2..all.len() {
            if !all[n - 1].mul(&all[n])?.is_zero() {
                return Err(Error::Construction(format!("{name}: d_{} d_{n} != 0", n - 1)));
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != ranks.len() || l.iter().zip(&ranks).any(|(v, r)| v.len() != *r) {
                    return Err(Error::Shape("basis labels do not match ranks".into()));
                }
                l
            }
            None => ranks
                .iter()
                .enumerate()
                .map(|(n, &r)| (0..r).map(|i| format!("c{n}_{i}")).collect())
                .collect(),
        };
        Ok(ChainComplex {
            name,
            ranks,
            diffs: all,
            labels,
        })
    }

    /// `Z` concentrated in degree 0, the monoidal unit.
    pub fn unit(max_degree: usize) -> Self {
        let mut ranks = vec![0; max_degree + 1];
        ranks[0] = 1;
        let diffs = (1..=max_degree).map(|n| Matrix::zeros(ranks[n - 1], ranks[n])).collect();
        ChainComplex::new("Z", ranks, diffs).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn max_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    /// `d_n: C_n -> C_{n-1}`; for `n = 0` the empty map.
    pub fn differential(&self, n: usize) -> &Matrix {
        &self.diffs[n]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn label(&self, n: usize, i: usize) -> &str {
        &self.labels[n][i]
    }

    /// Extends with zero groups or cuts down to max degree `d`.
    pub fn resized(&self, d: usize) -> ChainComplex {
        let mut ranks = self.ranks.clone();
        let mut labels = self.labels.clone();
        ranks.resize(d + 1, 0);
        labels.resize(d + 1, Vec::new());
        let diffs = (1..=d)
            .map(|n| {
                if n <= self.max_degree() {
                    self.diffs[n].clone()
                } else {
                    Matrix::zeros(ranks[n - 1], 0)
                }
            })
            .collect();
        ChainComplex::with_labels(self.name.clone(), ranks, diffs, Some(labels)).expect("resizing keeps d∘d = 0")
    }

    /// Deterministic text form: ranks, then each differential.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "chain-complex {}", self.name);
        let _ = writeln!(s, "max-degree {}", self.max_degree());
        let ranks: Vec<String> = self.ranks.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "ranks {}", ranks.join(" "));
        for n in 1..=self.max_degree() {
            let _ = writeln!(s, "d {n}");
            write_matrix(&mut s, &self.diffs[n]);
        }
        s
    }
}

fn same_complex(a: &Arc<ChainComplex>, b: &Arc<ChainComplex>) -> bool {
    Arc::ptr_eq(a, b) || (a.ranks == b.ranks && a.diffs == b.diffs)
}

/// A degreewise map of complexes, trustworthy on degrees `0..=valid`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: Arc<ChainComplex>,
    target: Arc<ChainComplex>,
    maps: Vec<Matrix>,
}

impl ChainMap {
    /// `maps[n]: source_n -> target_n` for `n = 0..=valid`.
    pub fn new(source: Arc<ChainComplex>, target: Arc<ChainComplex>, maps: Vec<Matrix>) -> Result<Self> {
        if maps.is_empty() || maps.len() > source.ranks.len() || maps.len() > target.ranks.len() {
            return Err(Error::Truncation(format!(
                "{} degree maps do not fit {} -> {}",
                maps.len(),
                source.name,
                target.name
            )));
        }
        for (n, m) in maps.iter().enumerate() {
            if m.shape() != (target.ranks[n], source.ranks[n]) {
                return Err(Error::Shape(format!(
                    "degree {n} map has shape {:?}, expected {:?}",
                    m.shape(),
                    (target.ranks[n], source.ranks[n])
                )));
            }
        }
        Ok(ChainMap { source, target, maps })
    }

    pub fn identity(c: Arc<ChainComplex>) -> Self {
        let maps = c.ranks.iter().map(|&r| Matrix::identity(r)).collect();
        ChainMap {
            source: c.clone(),
            target: c,
            maps,
        }
    }

    pub fn zero(source: Arc<ChainComplex>, target: Arc<ChainComplex>) -> Self {
        let top = source.max_degree().min(target.max_degree());
        let maps = (0..=top).map(|n| Matrix::zeros(target.ranks[n], source.ranks[n])).collect();
        ChainMap { source, target, maps }
    }

    pub fn source(&self) -> &Arc<ChainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChainComplex> {
        &self.target
    }

    /// Top degree on which the map is trustworthy.
    pub fn valid(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn degree(&self, n: usize) -> &Matrix {
        &self.maps[n]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Drops degrees above `valid`.
    pub fn restricted(&self, valid: usize) -> ChainMap {
        let mut out = self.clone();
        out.maps.truncate(valid + 1);
        out
    }

    /// Same matrices, relabelled endpoints with identical shapes.
    pub fn between(&self, source: Arc<ChainComplex>, target: Arc<ChainComplex>) -> Result<ChainMap> {
        ChainMap::new(source, target, self.maps.clone())
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &ChainMap) -> Result<ChainMap> {
        if !same_complex(&other.target, &self.source) {
            return Err(Error::Composition(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source.name, self.target.name, other.source.name, other.target.name
            )));
        }
        let top = self.valid().min(other.valid());
        let maps = (0..=top)
            .map(|n| self.maps[n].mul(&other.maps[n]))
            .collect::<Result<_>>()?;
        Ok(ChainMap {
            source: other.source.clone(),
            target: self.target.clone(),
            maps,
        })
    }

    fn zip(&self, other: &ChainMap, op: impl Fn(&Matrix, &Matrix) -> Result<Matrix>) -> Result<ChainMap> {
        if !same_complex(&self.source, &other.source) || !same_complex(&self.target, &other.target) {
            return Err(Error::Composition("maps have different endpoints".into()));
        }
        let top = self.valid().min(other.valid());
        let maps = (0..=top)
            .map(|n| op(&self.maps[n], &other.maps[n]))
            .collect::<Result<_>>()?;
        Ok(ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps,
        })
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        self.zip(other, |a, b| a.sub(b))
    }

    /// Violations of `d f_n = f_{n-1} d` on the valid range.
    pub fn check(&self, check: &str) -> VerificationReport {
        let mut report = VerificationReport::new(
            check,
            vec![self.source.name.clone(), self.target.name.clone()],
            self.valid(),
        );
        for n in 1..=self.valid() {
            let lhs = self.target.diffs[n].mul(&self.maps[n]).unwrap();
            let rhs = self.maps[n - 1].mul(&self.source.diffs[n]).unwrap();
            let src = &self.source.labels[n];
            let tgt = &self.target.labels[n - 1];
            report.compare_matrices(n, &lhs, &rhs, &|j| format!("d∘f vs f∘d on {}", src[j]), &|i| {
                tgt[i].clone()
            });
        }
        report
    }

    /// Entrywise comparison with another map between the same complexes.
    pub fn compare(&self, other: &ChainMap, check: &str) -> VerificationReport {
        let top = self.valid().min(other.valid());
        let mut report = VerificationReport::new(
            check,
            vec![self.source.name.clone(), self.target.name.clone()],
            top,
        );
        if self.source.ranks[..=top] != other.source.ranks[..=top]
            || self.target.ranks[..=top] != other.target.ranks[..=top]
        {
            report.fail_with("compared maps have different endpoints", 0);
            return report;
        }
        for n in 0..=top {
            let src = &self.source.labels[n];
            let tgt = &self.target.labels[n];
            report.compare_matrices(n, &self.maps[n], &other.maps[n], &|j| src[j].clone(), &|i| tgt[i].clone());
        }
        report
    }

    /// Reports whether every degree is the identity matrix.
    pub fn check_identity(&self, check: &str) -> VerificationReport {
        let id = ChainMap {
            source: self.source.clone(),
            target: self.source.clone(),
            maps: self.maps.iter().map(|m| Matrix::identity(m.cols())).collect(),
        };
        let mut report = VerificationReport::new(
            check,
            vec![self.source.name.clone(), self.target.name.clone()],
            self.valid(),
        );
        for n in 0..=self.valid() {
            if self.maps[n].shape() != id.maps[n].shape() {
                report.fail_with(format!("degree {n} is not square"), n);
                continue;
            }
            let lab = &self.source.labels[n];
            let tl = &self.target.labels[n];
            report.compare_matrices(n, &self.maps[n], &id.maps[n], &|j| lab[j].clone(), &|i| tl[i].clone());
        }
        report
    }

    /// Deterministic text form of the degree matrices.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "chain-map {} -> {}", self.source.name, self.target.name);
        let _ = writeln!(s, "valid {}", self.valid());
        for (n, m) in self.maps.iter().enumerate() {
            let _ = writeln!(s, "degree {n}");
            write_matrix(&mut s, m);
        }
        s
    }

    /// Describes the image of source basis element `j` in degree `n`.
    pub fn describe_column(&self, n: usize, j: usize) -> String {
        let tgt = &self.target.labels[n];
        format_combination(self.maps[n].column(j), &|i| tgt[i].clone())
    }
}

/// A witness `h` with `d h + h d = f - g` on degrees `0..=valid`.
pub(crate) fn homotopy_defect(
    f: &ChainMap,
    g: &ChainMap,
    h: &[Matrix],
    valid: usize,
) -> Result<Vec<Matrix>> {
    let src = &f.source;
    let tgt = &f.target;
    let mut out = Vec::with_capacity(valid + 1);
    for n in 0..=valid {
        let mut lhs = tgt.diffs[n + 1].mul(&h[n])?;
        if n > 0 {
            lhs = lhs.add(&h[n - 1].mul(&src.diffs[n])?)?;
        }
        let rhs = f.maps[n].sub(&g.maps[n])?;
        out.push(rhs.sub(&lhs)?);
    }
    Ok(out)
}

pub(crate) fn defect_report(
    check: &str,
    f: &ChainMap,
    defects: &[Matrix],
) -> VerificationReport {
    let mut report = VerificationReport::new(
        check,
        vec![f.source.name.clone(), f.target.name.clone()],
        defects.len().saturating_sub(1),
    );
    for (n, m) in defects.iter().enumerate() {
        for j in 0..m.cols() {
            if !m.column(j).is_empty() {
                let tgt = &f.target.labels[n];
                report.push_witness(Witness {
                    level: n,
                    basis: f.source.labels[n][j].clone(),
                    left: format_combination(m.column(j), &|i| tgt[i].clone()),
                    right: "0".into(),
                });
            }
        }
    }
    report
}

pub(crate) fn sign(exponent: usize) -> Int {
    if exponent % 2 == 0 {
        Int::from(1)
    } else {
        Int::from(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_squared_enforced() {
        let d1 = Matrix::from_rows(&[vec![1]]);
        let d2 = Matrix::from_rows(&[vec![1]]);
        assert!(ChainComplex::new("bad", vec![1, 1, 1], vec![d1, d2]).is_err());
    }

    #[test]
    fn unit_complex() {
        let z = ChainComplex::unit(3);
        assert_eq!(z.ranks(), &[1, 0, 0, 0]);
    }

    #[test]
    fn resize_pads_with_zeros() {
        let c = ChainComplex::new("c", vec![1, 1], vec![Matrix::from_rows(&[vec![2]])]).unwrap();
        let r = c.resized(3);
        assert_eq!(r.ranks(), &[1, 1, 0, 0]);
        assert_eq!(r.differential(1), c.differential(1));
    }

    #[test]
    fn composition_and_identity() {
        let c = Arc::new(ChainComplex::new("c", vec![1, 1], vec![Matrix::from_rows(&[vec![2]])]).unwrap());
        let id = ChainMap::identity(c.clone());
        assert!(id.check("id").passed());
        let two = ChainMap::new(c.clone(), c.clone(), vec![Matrix::from_rows(&[vec![2]]); 2]).unwrap();
        let four = two.after(&two).unwrap();
        assert_eq!(four.degree(1).get(0, 0), Int::from(4));
        assert!(four.check_identity("id").failed());
    }

    #[test]
    fn non_chain_map_has_witness() {
        let c = Arc::new(ChainComplex::new("c", vec![1, 1], vec![Matrix::from_rows(&[vec![1]])]).unwrap());
        let f = ChainMap::new(c.clone(), c, vec![Matrix::identity(1), Matrix::zeros(1, 1)]).unwrap();
        let r = f.check("chain-map");
        assert!(r.failed());
        assert_eq!(r.witnesses[0].level, 1);
    }
}
