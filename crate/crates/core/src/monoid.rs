//! Simplicial rings from nerves of commutative monoids, the differential
//! graded algebras their chains carry through ∇, and multiplicativity of AW.

use std::sync::Arc;

use crate::chain::{associator, merge, middle_swap as chain_middle_swap, ChainComplex, ChainMap, ChainModel};
use crate::error::{Error, Result};
use crate::ez::{EzPair, ShuffleFault};
use crate::linalg::{Int, Matrix};
use crate::report::VerificationReport;
use crate::simplicial::{free_on_nerve, middle_swap, tensor, tuple_index, tuples, FiniteMonoid, SimplicialMap, SimplicialModule};

/// A simplicial module with a levelwise associative unital product that
/// commutes with every face and degeneracy.
#[derive(Clone, Debug)]
pub struct SimplicialRing {
    pub module: Arc<SimplicialModule>,
    /// `m: A ⊗ A -> A`.
    pub mult: SimplicialMap,
    /// Basis index of the unit at each level.
    pub unit: Vec<usize>,
}

impl SimplicialRing {
    /// `Z[N M]` with the componentwise product of tuples. Faces are
    /// multiplicative only for commutative `M`.
    pub fn from_nerve(monoid: &FiniteMonoid, max_degree: usize) -> Result<Self> {
        if !monoid.is_commutative() {
            return Err(Error::Construction(format!(
                "the nerve of {} is not a simplicial monoid: the monoid is not commutative",
                monoid.name()
            )));
        }
        let a = Arc::new(free_on_nerve(monoid, max_degree));
        let aa = Arc::new(tensor(&a, &a)?);
        let m = monoid.order();
        let levels = (0..=max_degree)
            .map(|n| {
                let basis = tuples(n, m);
                let images: Vec<usize> = basis
                    .iter()
                    .flat_map(|s| {
                        basis.iter().map(move |t| {
                            let prod: Vec<usize> = s.iter().zip(t).map(|(&x, &y)| monoid.mul(x, y)).collect();
                            tuple_index(&prod, m)
                        })
                    })
                    .collect();
                Matrix::from_basis_map(basis.len(), &images)
            })
            .collect();
        let mult = SimplicialMap::new(aa, a.clone(), levels)?;
        let unit = (0..=max_degree)
            .map(|n| tuple_index(&vec![monoid.unit(); n], m))
            .collect();
        Ok(SimplicialRing { module: a, mult, unit })
    }

    pub fn max_degree(&self) -> usize {
        self.module.max_degree()
    }

    pub fn name(&self) -> &str {
        self.module.name()
    }

    /// `A ⊗ B` with product `(m_A ⊗ m_B) ∘ (1 ⊗ σ ⊗ 1)`.
    pub fn tensor(a: &SimplicialRing, b: &SimplicialRing) -> Result<SimplicialRing> {
        let (ma, mb) = (&a.module, &b.module);
        let ab = Arc::new(tensor(ma, mb)?);
        let ab_ab = Arc::new(tensor(&ab, &ab)?);
        let aa_bb = Arc::new(tensor(&tensor(ma, ma)?, &tensor(mb, mb)?)?);
        let sigma = middle_swap(ma, mb, ma, mb, ab_ab, aa_bb.clone())?;
        let mm = SimplicialMap::tensor(&a.mult, &b.mult)?.between(aa_bb, ab.clone())?;
        let mult = mm.after(&sigma)?;
        let unit = (0..=a.max_degree())
            .map(|n| a.unit[n] * mb.rank(n) + b.unit[n])
            .collect();
        Ok(SimplicialRing { module: ab, mult, unit })
    }

    /// Associativity, unitality, and compatibility of the product and unit
    /// with the simplicial operators.
    pub fn validate(&self) -> Result<VerificationReport> {
        let a = &self.module;
        let d = self.max_degree();
        let mut report = VerificationReport::new("simplicial-ring", vec![a.name().to_string()], d);
        merge(&mut report, a.validate());
        merge(&mut report, self.mult.check());
        for n in 0..=d {
            let r = a.rank(n);
            let m = self.mult.level(n);
            let id = Matrix::identity(r);
            let left = m.mul(&m.kron(&id))?;
            let right = m.mul(&id.kron(m))?;
            let lab = a.labels(n);
            let triple = |j: usize| format!("{}⊗{}⊗{}", lab[j / (r * r)], lab[(j / r) % r], lab[j % r]);
            report.compare_matrices(n, &left, &right, &|j| format!("associativity on {}", triple(j)), &|i| lab[i].clone());
            let e = Matrix::from_basis_map(r, &[self.unit[n]]);
            let lu = m.mul(&e.kron(&id))?;
            let ru = m.mul(&id.kron(&e))?;
            report.compare_matrices(n, &lu, &id, &|j| format!("left unit on {}", lab[j]), &|i| lab[i].clone());
            report.compare_matrices(n, &ru, &id, &|j| format!("right unit on {}", lab[j]), &|i| lab[i].clone());
            if n > 0 {
                for i in 0..=n {
                    if a.face(n, i).column(self.unit[n]) != [(self.unit[n - 1], Int::from(1))] {
                        report.fail_with(format!("d_{i} does not preserve the unit"), n);
                    }
                }
            }
            if n < d {
                for i in 0..=n {
                    if a.degeneracy(n, i).column(self.unit[n]) != [(self.unit[n + 1], Int::from(1))] {
                        report.fail_with(format!("s_{i} does not preserve the unit"), n);
                    }
                }
            }
        }
        Ok(report)
    }
}

/// A chain complex with a product `C ⊗ C -> C` and a unit in degree 0.
#[derive(Clone, Debug)]
pub struct DGAlgebra {
    pub complex: Arc<ChainComplex>,
    pub product: ChainMap,
    /// `Z[0] -> C`.
    pub unit: ChainMap,
}

fn rename(mut r: VerificationReport, check: &str, objects: Vec<String>) -> VerificationReport {
    r.check = check.into();
    r.objects = objects;
    r
}

impl DGAlgebra {
    fn objects(&self) -> Vec<String> {
        vec![self.complex.name().to_string()]
    }

    /// The product commutes with the differentials (the Leibniz rule).
    pub fn check_leibniz(&self) -> VerificationReport {
        rename(self.product.check("dga-leibniz"), "dga-leibniz", self.objects())
    }

    /// `μ ∘ (μ ⊗ 1) = μ ∘ (1 ⊗ μ) ∘ assoc`.
    pub fn check_associativity(&self) -> Result<VerificationReport> {
        let c = &self.complex;
        let id = ChainMap::identity(c.clone());
        let left = self.product.after(&ChainMap::tensor(&self.product, &id)?)?;
        let assoc = associator(c, c, c)?;
        let right = self.product.after(&ChainMap::tensor(&id, &self.product)?)?.after(&assoc)?;
        Ok(rename(left.compare(&right, "dga-associativity"), "dga-associativity", self.objects()))
    }

    /// `μ ∘ (e ⊗ 1)` and `μ ∘ (1 ⊗ e)` are the unitors.
    pub fn check_unit(&self) -> Result<VerificationReport> {
        let c = &self.complex;
        let id = ChainMap::identity(c.clone());
        let mut report = VerificationReport::new("dga-unit", self.objects(), self.product.valid());
        for f in [ChainMap::tensor(&self.unit, &id)?, ChainMap::tensor(&id, &self.unit)?] {
            let g = self.product.after(&f)?;
            let unitor = ChainMap::new(g.source().clone(), c.clone(), c.ranks().iter().map(|&r| Matrix::identity(r)).collect())?;
            merge(&mut report, g.compare(&unitor, "dga-unit"));
        }
        Ok(report)
    }
}

fn ring_model(r: &SimplicialRing, normalized: bool, fault: Option<&ShuffleFault>) -> Result<(EzPair, DGAlgebra)> {
    let pair = EzPair::with_product(r.module.clone(), r.module.clone(), r.mult.source().clone(), normalized)?;
    let m = ChainModel::map_of(&pair.ab, &pair.a, &r.mult)?;
    let product = m.after(&pair.shuffle_with(fault)?)?;
    let complex = pair.a.complex().clone();
    let d = complex.max_degree();
    let z = Arc::new(ChainComplex::unit(d));
    let e = pair.a.proj()[0].mul(&Matrix::from_basis_map(r.module.rank(0), &[r.unit[0]]))?;
    let maps = (0..=d)
        .map(|n| if n == 0 { e.clone() } else { Matrix::zeros(complex.rank(n), 0) })
        .collect();
    let unit = ChainMap::new(z, complex.clone(), maps)?;
    Ok((pair, DGAlgebra { complex, product, unit }))
}

/// Chains of `R` with product `C(m) ∘ ∇` and unit the level-0 unit.
pub fn to_dga(r: &SimplicialRing, normalized: bool) -> Result<DGAlgebra> {
    Ok(ring_model(r, normalized, None)?.1)
}

/// AW intertwines the products: `AW ∘ μ_{A⊗B} = (μ_A ⊗ μ_B) ∘ τ ∘ (AW ⊗ AW)`
/// as maps `C(A⊗B) ⊗ C(A⊗B) -> C(A) ⊗ C(B)`.
pub fn check_aw_multiplicative(
    a: &SimplicialRing,
    b: &SimplicialRing,
    normalized: bool,
    fault: Option<&ShuffleFault>,
) -> Result<VerificationReport> {
    let ab = SimplicialRing::tensor(a, b)?;
    let (_, dga_a) = ring_model(a, normalized, fault)?;
    let (_, dga_b) = ring_model(b, normalized, fault)?;
    let (_, dga_ab) = ring_model(&ab, normalized, fault)?;
    let pair = EzPair::with_product(a.module.clone(), b.module.clone(), ab.module.clone(), normalized)?;
    let aw = pair.aw()?;
    let lhs = aw.after(&dga_ab.product)?;
    let aw2 = ChainMap::tensor(&aw, &aw)?;
    let tau = chain_middle_swap(&dga_a.complex, &dga_b.complex, &dga_a.complex, &dga_b.complex)?;
    let mm = ChainMap::tensor(&dga_a.product, &dga_b.product)?;
    let rhs = mm.after(&tau)?.after(&aw2)?;
    Ok(rename(
        lhs.compare(&rhs, "aw-multiplicative"),
        "aw-multiplicative",
        vec![a.name().to_string(), b.name().to_string()],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(d: usize) -> SimplicialRing {
        SimplicialRing::from_nerve(&FiniteMonoid::cyclic(2), d).unwrap()
    }

    #[test]
    fn nerve_ring_is_valid() {
        let r = z2(3);
        assert!(r.validate().unwrap().passed());
        let t = SimplicialRing::tensor(&r, &r).unwrap();
        assert!(t.validate().unwrap().passed());
    }

    #[test]
    fn noncommutative_monoid_is_rejected() {
        // left-zero semigroup on {a, b} with an adjoined unit e
        let table = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]];
        let m = FiniteMonoid::new("lz", table).unwrap();
        assert!(SimplicialRing::from_nerve(&m, 2).is_err());
    }

    #[test]
    fn trivial_nerve_gives_the_ground_ring() {
        let r = SimplicialRing::from_nerve(&FiniteMonoid::trivial(), 3).unwrap();
        let dga = to_dga(&r, true).unwrap();
        assert_eq!(dga.complex.ranks(), &[1, 0, 0, 0]);
        assert!(dga.product.degree(0).is_identity());
    }

    #[test]
    fn z2_dga() {
        let dga = to_dga(&z2(3), true).unwrap();
        assert_eq!(dga.complex.ranks(), &[1, 1, 1, 1]);
        assert!(dga.check_leibniz().passed());
        assert!(dga.check_associativity().unwrap().passed());
        assert!(dga.check_unit().unwrap().passed());
        // the degree-0 product is the level-0 ring product
        assert_eq!(dga.product.degree(0), &Matrix::identity(1));
    }

    #[test]
    fn aw_is_multiplicative() {
        for normalized in [true, false] {
            let r = check_aw_multiplicative(&z2(2), &z2(2), normalized, None).unwrap();
            assert!(r.passed(), "{}", r.to_text(false));
        }
        let bad = check_aw_multiplicative(&z2(2), &z2(2), false, Some(&ShuffleFault::standard())).unwrap();
        assert!(bad.failed());
        assert_eq!(bad.witnesses[0].level, 2);
    }
}
