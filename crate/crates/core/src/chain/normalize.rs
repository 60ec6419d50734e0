//! The chain functors: unnormalized chains, normalized chains as a quotient
//! by degeneracies, and the Moore subcomplex.

use std::sync::Arc;

use super::{sign, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::{format_combination, inverse, kernel_basis, smith_normal_form, solve_many, Int, Matrix};
use crate::report::VerificationReport;
use crate::simplicial::{SimplicialMap, SimplicialModule};

/// `C(A)` with `d = Σ (-1)^i d_i`.
/// Fails if `d∘d != 0`, which happens only for a corrupted module.
pub fn unnormalized_chains(a: &SimplicialModule) -> Result<ChainComplex> {
    let diffs = (1..=a.max_degree())
        .map(|n| {
            let mut acc = Matrix::zeros(a.rank(n - 1), a.rank(n));
            for i in 0..=n {
                let term = a.face(n, i);
                acc = if i % 2 == 0 { acc.add(term) } else { acc.sub(term) }.unwrap();
            }
            acc
        })
        .collect();
    let labels = (0..=a.max_degree()).map(|n| a.labels(n).to_vec()).collect();
    ChainComplex::with_labels(format!("C({})", a.name()), a.ranks().to_vec(), diffs, Some(labels))
}

/// `N(A) = C(A) / degenerate`, with the projection and a degreewise section.
#[derive(Clone, Debug)]
pub struct QuotientModel {
    pub complex: Arc<ChainComplex>,
    /// `proj[n]: A_n -> N_n`, killing exactly the degenerate span.
    pub proj: Vec<Matrix>,
    /// `lift[n]: N_n -> A_n` with `proj ∘ lift = 1`; not a chain map in general.
    pub lift: Vec<Matrix>,
    /// Whether the degenerate span is spanned by basis elements.
    pub basis_compatible: bool,
}

impl QuotientModel {
    /// `proj` as a chain map out of the supplied `C(A)`.
    pub fn projection(&self, unnormalized: Arc<ChainComplex>) -> Result<ChainMap> {
        ChainMap::new(unnormalized, self.complex.clone(), self.proj.clone())
    }

    /// Indices of the basis elements that survive, when basis compatible.
    pub fn nondegenerate(&self, n: usize) -> Option<Vec<usize>> {
        self.basis_compatible.then(|| {
            (0..self.lift[n].cols())
                .map(|k| self.lift[n].column(k)[0].0)
                .collect()
        })
    }
}

fn is_unit_basis_map(m: &Matrix) -> bool {
    m.columns().all(|c| c.len() == 1 && c[0].1 == Int::from(1))
}

/// Degenerate span at level `n`, as a sorted index set when every
/// degeneracy into level `n` sends basis elements to basis elements.
fn degenerate_indices(a: &SimplicialModule, n: usize) -> Option<Vec<bool>> {
    let mut degenerate = vec![false; a.rank(n)];
    if n == 0 {
        return Some(degenerate);
    }
    for i in 0..n {
        let s = a.degeneracy(n - 1, i);
        if !is_unit_basis_map(s) {
            return None;
        }
        for c in s.columns() {
            degenerate[c[0].0] = true;
        }
    }
    Some(degenerate)
}

/// The quotient model of normalized chains.
pub fn quotient_model(a: &SimplicialModule) -> Result<QuotientModel> {
    let d = a.max_degree();
    let mut proj = Vec::with_capacity(d + 1);
    let mut lift = Vec::with_capacity(d + 1);
    let mut labels = Vec::with_capacity(d + 1);
    let mut basis_compatible = true;
    for n in 0..=d {
        let r = a.rank(n);
        match degenerate_indices(a, n) {
            Some(deg) => {
                let keep: Vec<usize> = (0..r).filter(|&x| !deg[x]).collect();
                let mut trip = Vec::with_capacity(keep.len());
                for (k, &x) in keep.iter().enumerate() {
                    trip.push((k, x, Int::from(1)));
                }
                proj.push(Matrix::from_triplets(keep.len(), r, trip));
                lift.push(Matrix::identity(r).select_columns(&keep));
                labels.push(keep.iter().map(|&x| a.label(n, x).to_string()).collect());
            }
            None => {
                basis_compatible = false;
                let s = Matrix::hstack(
                    &(0..n).map(|i| a.degeneracy(n - 1, i).clone()).collect::<Vec<_>>(),
                    r,
                )?;
                let snf = smith_normal_form(&s);
                if snf.invariant_factors.iter().any(|f| *f != Int::from(1)) {
                    return Err(Error::Construction(format!(
                        "degenerate part of {} at level {n} is not a direct summand",
                        a.name()
                    )));
                }
                let rk = snf.rank();
                let keep: Vec<usize> = (rk..r).collect();
                let p = snf.u.select_rows(&keep);
                let l = snf.u_inv.select_columns(&keep);
                let lab = a.labels(n);
                labels.push(
                    (0..l.cols())
                        .map(|k| format!("⟨{}⟩", format_combination(l.column(k), &|i| lab[i].clone())))
                        .collect(),
                );
                proj.push(p);
                lift.push(l);
            }
        }
    }
    let c = unnormalized_chains(a)?;
    let mut diffs = Vec::with_capacity(d);
    for n in 1..=d {
        let dn = proj[n - 1].mul(c.differential(n))?.mul(&lift[n])?;
        // the differential must respect the degenerate part
        if proj[n - 1].mul(c.differential(n))? != dn.mul(&proj[n])? {
            return Err(Error::Construction(format!(
                "differential of C({}) does not preserve degeneracies at level {n}",
                a.name()
            )));
        }
        diffs.push(dn);
    }
    let ranks = proj.iter().map(Matrix::rows).collect();
    let complex = ChainComplex::with_labels(format!("N({})", a.name()), ranks, diffs, Some(labels))?;
    Ok(QuotientModel {
        complex: Arc::new(complex),
        proj,
        lift,
        basis_compatible,
    })
}

/// The Moore model `∩_{i<n} ker d_i` with differential `(-1)^n d_n`.
#[derive(Clone, Debug)]
pub struct MooreModel {
    pub complex: Arc<ChainComplex>,
    /// `incl[n]: M_n -> A_n`, columns a basis of the intersection.
    pub incl: Vec<Matrix>,
}

impl MooreModel {
    pub fn inclusion(&self, unnormalized: Arc<ChainComplex>) -> Result<ChainMap> {
        ChainMap::new(self.complex.clone(), unnormalized, self.incl.clone())
    }

    /// Coordinates in the Moore basis of vectors known to lie in it.
    pub fn coordinates(&self, n: usize, vectors: &Matrix) -> Result<Matrix> {
        solve_many(&self.incl[n], vectors)?
            .ok_or_else(|| Error::Construction(format!("vectors leave the Moore complex in degree {n}")))
    }
}

pub fn moore_model(a: &SimplicialModule) -> Result<MooreModel> {
    let d = a.max_degree();
    let mut incl = vec![Matrix::identity(a.rank(0))];
    for n in 1..=d {
        let faces: Vec<Matrix> = (0..n).map(|i| a.face(n, i).clone()).collect();
        let stacked = Matrix::vstack(&faces, a.rank(n))?;
        incl.push(kernel_basis(&stacked));
    }
    let mut diffs = Vec::with_capacity(d);
    for n in 1..=d {
        let image = a.face(n, n).mul(&incl[n])?.scale(&sign(n));
        let coords = solve_many(&incl[n - 1], &image)?.ok_or_else(|| {
            Error::Construction(format!("last face leaves the Moore complex of {} at {n}", a.name()))
        })?;
        diffs.push(coords);
    }
    let labels = (0..=d)
        .map(|n| {
            let lab = a.labels(n);
            (0..incl[n].cols())
                .map(|k| {
                    let col = incl[n].column(k);
                    if col.len() == 1 && col[0].1 == Int::from(1) {
                        lab[col[0].0].clone()
                    } else {
                        format!("⟨{}⟩", format_combination(col, &|i| lab[i].clone()))
                    }
                })
                .collect()
        })
        .collect();
    let ranks = incl.iter().map(Matrix::cols).collect();
    let complex = ChainComplex::with_labels(format!("M({})", a.name()), ranks, diffs, Some(labels))?;
    Ok(MooreModel {
        complex: Arc::new(complex),
        incl,
    })
}

/// Both models of `N(A)` with the comparison isomorphism between them.
#[derive(Clone, Debug)]
pub struct NormalizedChains {
    pub unnormalized: Arc<ChainComplex>,
    pub quotient: QuotientModel,
    pub moore: MooreModel,
    /// `proj ∘ incl: Moore -> quotient`.
    pub comparison: ChainMap,
    pub comparison_inverse: ChainMap,
}

pub fn normalized_chains(a: &SimplicialModule) -> Result<NormalizedChains> {
    let unnormalized = Arc::new(unnormalized_chains(a)?);
    let quotient = quotient_model(a)?;
    let moore = moore_model(a)?;
    let maps = (0..=a.max_degree())
        .map(|n| quotient.proj[n].mul(&moore.incl[n]))
        .collect::<Result<Vec<_>>>()?;
    let inv = maps.iter().map(inverse).collect::<Result<Vec<_>>>()?;
    let comparison = ChainMap::new(moore.complex.clone(), quotient.complex.clone(), maps)?;
    let comparison_inverse = ChainMap::new(quotient.complex.clone(), moore.complex.clone(), inv)?;
    Ok(NormalizedChains {
        unnormalized,
        quotient,
        moore,
        comparison,
        comparison_inverse,
    })
}

impl NormalizedChains {
    /// Confirms that projection, inclusion and comparison are chain maps and
    /// that the comparison is invertible in both directions.
    pub fn check(&self) -> VerificationReport {
        let name = self.unnormalized.name().to_string();
        let mut report = VerificationReport::new("normalized-models", vec![name], self.unnormalized.max_degree());
        let parts = [
            self.quotient.projection(self.unnormalized.clone()),
            self.moore.inclusion(self.unnormalized.clone()),
            Ok(self.comparison.clone()),
            Ok(self.comparison_inverse.clone()),
        ];
        for part in parts {
            match part {
                Ok(f) => merge(&mut report, f.check("chain-map")),
                Err(e) => report.fail_with(e.to_string(), 0),
            }
        }
        for (n, m) in self.quotient.proj.iter().enumerate() {
            let surjective = m.mul(&self.quotient.lift[n]).map(|x| x.is_identity()).unwrap_or(false);
            if !surjective {
                report.fail_with(format!("projection is not split surjective in degree {n}"), n);
            }
        }
        match self.comparison_inverse.after(&self.comparison) {
            Ok(id) => merge(&mut report, id.check_identity("inverse")),
            Err(e) => report.fail_with(e.to_string(), 0),
        }
        report
    }
}

/// Chains of a simplicial module in one of the two models used by the
/// structure maps: unnormalized, or the quotient model of normalized chains.
#[derive(Clone, Debug)]
pub struct ChainModel {
    pub module: Arc<SimplicialModule>,
    pub unnormalized: Arc<ChainComplex>,
    pub quotient: Option<QuotientModel>,
}

impl ChainModel {
    pub fn new(module: Arc<SimplicialModule>, normalized: bool) -> Result<Self> {
        let unnormalized = Arc::new(unnormalized_chains(&module)?);
        let quotient = if normalized { Some(quotient_model(&module)?) } else { None };
        Ok(ChainModel {
            module,
            unnormalized,
            quotient,
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.quotient.is_some()
    }

    /// The complex maps are expressed in.
    pub fn complex(&self) -> &Arc<ChainComplex> {
        match &self.quotient {
            Some(q) => &q.complex,
            None => &self.unnormalized,
        }
    }

    /// `C_n -> model_n`: the projection, or the identity.
    pub fn proj(&self) -> Vec<Matrix> {
        match &self.quotient {
            Some(q) => q.proj.clone(),
            None => self.unnormalized.ranks().iter().map(|&r| Matrix::identity(r)).collect(),
        }
    }

    /// `model_n -> C_n`: the section, or the identity.
    pub fn lift(&self) -> Vec<Matrix> {
        match &self.quotient {
            Some(q) => q.lift.clone(),
            None => self.unnormalized.ranks().iter().map(|&r| Matrix::identity(r)).collect(),
        }
    }

    /// Expresses a degreewise map `C(source) -> C(target)` in the models:
    /// `proj ∘ f ∘ lift`.
    pub fn descend(source: &ChainModel, target: &ChainModel, maps: &[Matrix]) -> Result<ChainMap> {
        let maps = match (&source.quotient, &target.quotient) {
            (None, None) => maps.to_vec(),
            _ => {
                let (p, l) = (target.proj(), source.lift());
                maps.iter()
                    .enumerate()
                    .map(|(n, m)| p[n].mul(m)?.mul(&l[n]))
                    .collect::<Result<_>>()?
            }
        };
        ChainMap::new(source.complex().clone(), target.complex().clone(), maps)
    }

    /// The chain map induced by a simplicial map between the two modules.
    pub fn map_of(source: &ChainModel, target: &ChainModel, f: &SimplicialMap) -> Result<ChainMap> {
        ChainModel::descend(source, target, f.levels())
    }
}

pub(crate) fn merge(into: &mut VerificationReport, from: VerificationReport) {
    for w in from.witnesses {
        into.push_witness(w);
    }
    if into.reason.is_none() {
        into.reason = from.reason;
    }
    into.details.extend(from.details);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{constant_z, free_on_nerve, free_on_standard_simplex, FiniteMonoid};

    #[test]
    fn constant_differentials_alternate() {
        let c = unnormalized_chains(&constant_z(3)).unwrap();
        assert!(c.differential(1).is_zero());
        assert!(c.differential(2).is_identity());
        assert!(c.differential(3).is_zero());
    }

    #[test]
    fn interval_boundary() {
        let c = unnormalized_chains(&free_on_standard_simplex(1, 2)).unwrap();
        // basis at level 1: [00], [01], [11]; ι = [01]
        let col = c.differential(1).column(1);
        assert_eq!(col, &[(0, Int::from(-1)), (1, Int::from(1))]);
    }

    #[test]
    fn normalized_ranks() {
        let n = normalized_chains(&free_on_standard_simplex(1, 3)).unwrap();
        assert_eq!(n.quotient.complex.ranks(), &[2, 1, 0, 0]);
        assert_eq!(n.moore.complex.ranks(), &[2, 1, 0, 0]);
        assert!(n.check().passed());
        let p = normalized_chains(&free_on_standard_simplex(0, 3)).unwrap();
        assert_eq!(p.quotient.complex.ranks(), &[1, 0, 0, 0]);
        let z2 = normalized_chains(&free_on_nerve(&FiniteMonoid::cyclic(2), 3)).unwrap();
        assert_eq!(z2.quotient.complex.ranks(), &[1, 1, 1, 1]);
        assert!(z2.check().passed());
    }

    #[test]
    fn triangle_models_agree() {
        let n = normalized_chains(&free_on_standard_simplex(2, 4)).unwrap();
        assert_eq!(n.quotient.complex.ranks(), &[3, 3, 1, 0, 0]);
        assert!(n.check().passed());
    }
}
