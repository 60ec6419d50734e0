//! Coherence of AW and ∇: associativity, units, symmetry, naturality.

use std::sync::Arc;

use super::EzPair;
use crate::chain::{associator, koszul_swap_with, ChainComplex, ChainMap, ChainModel};
use crate::delta::DeltaMorphism;
use crate::error::Result;
use crate::linalg::{Int, Matrix};
use crate::report::VerificationReport;
use crate::simplicial::{constant_z, induced_by_delta, swap_between, tensor, SimplicialMap, SimplicialModule};

fn names(ms: &[&SimplicialModule]) -> Vec<String> {
    ms.iter().map(|m| m.name().to_string()).collect()
}

fn relabel(mut r: VerificationReport, check: &str, objects: Vec<String>) -> VerificationReport {
    r.check = check.into();
    r.objects = objects;
    r
}

/// `∇_{B,A} ∘ τ = C(σ) ∘ ∇_{A,B}` with `τ` the Koszul swap.
pub fn nabla_symmetry(a: &Arc<SimplicialModule>, b: &Arc<SimplicialModule>, normalized: bool) -> Result<VerificationReport> {
    nabla_symmetry_with(a, b, normalized, &|p, q| p * q)
}

/// Same check with a chosen Koszul sign exponent.
pub fn nabla_symmetry_with(
    a: &Arc<SimplicialModule>,
    b: &Arc<SimplicialModule>,
    normalized: bool,
    exponent: &dyn Fn(usize, usize) -> usize,
) -> Result<VerificationReport> {
    let ab = EzPair::new(a.clone(), b.clone(), normalized)?;
    let ba = EzPair::new(b.clone(), a.clone(), normalized)?;
    let tau = koszul_swap_with(ab.a.complex(), ab.b.complex(), exponent)?;
    let lhs = ba.shuffle()?.after(&tau)?;
    let sigma = swap_between(a, b, ab.ab.module.clone(), ba.ab.module.clone())?;
    let c_sigma = ChainModel::map_of(&ab.ab, &ba.ab, &sigma)?;
    let rhs = c_sigma.after(&ab.shuffle()?)?;
    Ok(relabel(lhs.compare(&rhs, "nabla-symmetry"), "nabla-symmetry", names(&[a, b])))
}

/// `assoc ∘ (AW_{A,B} ⊗ 1) ∘ AW_{AB,C} = (1 ⊗ AW_{B,C}) ∘ AW_{A,BC}`.
pub fn aw_colax_associativity(
    a: &Arc<SimplicialModule>,
    b: &Arc<SimplicialModule>,
    c: &Arc<SimplicialModule>,
    normalized: bool,
) -> Result<VerificationReport> {
    let ab = Arc::new(tensor(a, b)?);
    let bc = Arc::new(tensor(b, c)?);
    let ab_c = EzPair::new(ab.clone(), c.clone(), normalized)?;
    let a_b = EzPair::with_product(a.clone(), b.clone(), ab, normalized)?;
    let b_c = EzPair::with_product(b.clone(), c.clone(), bc.clone(), normalized)?;
    let a_bc = EzPair::new(a.clone(), bc, normalized)?;
    let id_c = ChainMap::identity(ab_c.b.complex().clone());
    let id_a = ChainMap::identity(a_bc.a.complex().clone());
    let assoc = associator(a_b.a.complex(), a_b.b.complex(), ab_c.b.complex())?;
    let left = assoc
        .after(&ChainMap::tensor(&a_b.aw()?, &id_c)?)?
        .after(&ab_c.aw()?)?;
    let right = ChainMap::tensor(&id_a, &b_c.aw()?)?.after(&a_bc.aw()?)?;
    Ok(relabel(left.compare(&right, "aw-colax-associativity"), "aw-colax-associativity", names(&[a, b, c])))
}

/// `∇_{AB,C} ∘ (∇_{A,B} ⊗ 1) = ∇_{A,BC} ∘ (1 ⊗ ∇_{B,C}) ∘ assoc`.
pub fn nabla_lax_associativity(
    a: &Arc<SimplicialModule>,
    b: &Arc<SimplicialModule>,
    c: &Arc<SimplicialModule>,
    normalized: bool,
) -> Result<VerificationReport> {
    let ab = Arc::new(tensor(a, b)?);
    let bc = Arc::new(tensor(b, c)?);
    let ab_c = EzPair::new(ab.clone(), c.clone(), normalized)?;
    let a_b = EzPair::with_product(a.clone(), b.clone(), ab, normalized)?;
    let b_c = EzPair::with_product(b.clone(), c.clone(), bc.clone(), normalized)?;
    let a_bc = EzPair::new(a.clone(), bc, normalized)?;
    let id_c = ChainMap::identity(ab_c.b.complex().clone());
    let id_a = ChainMap::identity(a_bc.a.complex().clone());
    let assoc = associator(a_b.a.complex(), a_b.b.complex(), ab_c.b.complex())?;
    let left = ab_c.shuffle()?.after(&ChainMap::tensor(&a_b.shuffle()?, &id_c)?)?;
    let right = a_bc
        .shuffle()?
        .after(&ChainMap::tensor(&id_a, &b_c.shuffle()?)?)?
        .after(&assoc)?;
    Ok(relabel(left.compare(&right, "nabla-lax-associativity"), "nabla-lax-associativity", names(&[a, b, c])))
}

/// A deliberately wrong counit `α` and unit `κ`: both scaled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitFault {
    pub scale: i64,
}

/// `α: M(Z) -> Z[0]`, the identity in degree 0 and zero above.
fn augmentation(mz: &Arc<ChainComplex>, unit: &Arc<ChainComplex>, scale: i64) -> Result<ChainMap> {
    let maps = (0..=mz.max_degree())
        .map(|n| {
            if n == 0 {
                Matrix::identity(1).scale(&Int::from(scale))
            } else {
                Matrix::zeros(0, mz.rank(n))
            }
        })
        .collect();
    ChainMap::new(mz.clone(), unit.clone(), maps)
}

fn coaugmentation(mz: &Arc<ChainComplex>, unit: &Arc<ChainComplex>, scale: i64) -> Result<ChainMap> {
    let maps = (0..=mz.max_degree())
        .map(|n| {
            if n == 0 {
                Matrix::identity(1).scale(&Int::from(scale))
            } else {
                Matrix::zeros(mz.rank(n), 0)
            }
        })
        .collect();
    ChainMap::new(unit.clone(), mz.clone(), maps)
}

/// Identity matrices between two complexes with equal ranks, e.g. the
/// unitors `M ⊗ Z[0] ≅ M` and `M(A ⊗ Z) ≅ M(A)`.
fn identification(source: &Arc<ChainComplex>, target: &Arc<ChainComplex>) -> Result<ChainMap> {
    let maps = source.ranks().iter().map(|&r| Matrix::identity(r)).collect();
    ChainMap::new(source.clone(), target.clone(), maps)
}

/// The unit diagrams for AW (with `α` the identity on the normalized unit)
/// and for ∇ (with `κ` the identity), on both sides.
pub fn unit_coherence_check(a: &Arc<SimplicialModule>, normalized: bool) -> Result<VerificationReport> {
    unit_coherence_check_with(a, normalized, None)
}

pub fn unit_coherence_check_with(
    a: &Arc<SimplicialModule>,
    normalized: bool,
    fault: Option<UnitFault>,
) -> Result<VerificationReport> {
    let scale = fault.map_or(1, |f| f.scale);
    let z = Arc::new(constant_z(a.max_degree()));
    let unit = Arc::new(ChainComplex::unit(a.max_degree()));
    let mut report = VerificationReport::new("unit-coherence", names(&[a, &z]), a.max_degree());
    for right in [true, false] {
        let pair = if right {
            EzPair::new(a.clone(), z.clone(), normalized)?
        } else {
            EzPair::new(z.clone(), a.clone(), normalized)?
        };
        let (ma, mz) = if right {
            (pair.a.complex().clone(), pair.b.complex().clone())
        } else {
            (pair.b.complex().clone(), pair.a.complex().clone())
        };
        let alpha = augmentation(&mz, &unit, scale)?;
        let kappa = coaugmentation(&mz, &unit, scale)?;
        let id = ChainMap::identity(ma.clone());
        let (with_alpha, with_kappa) = if right {
            (ChainMap::tensor(&id, &alpha)?, ChainMap::tensor(&id, &kappa)?)
        } else {
            (ChainMap::tensor(&alpha, &id)?, ChainMap::tensor(&kappa, &id)?)
        };
        let into_product = identification(&ma, pair.ab.complex())?;
        let out_of_product = identification(pair.ab.complex(), &ma)?;
        let unitor = identification(with_alpha.target(), &ma)?;
        let unitor_inv = identification(&ma, with_kappa.source())?;
        let colax = unitor.after(&with_alpha)?.after(&pair.aw()?)?.after(&into_product)?;
        let lax = out_of_product
            .after(&pair.shuffle()?)?
            .after(&with_kappa)?
            .after(&unitor_inv)?;
        for (side, f) in [("AW", colax), ("∇", lax)] {
            let r = f.check_identity("unit");
            for mut w in r.witnesses {
                w.basis = format!("{side} {} unit on {}", if right { "right" } else { "left" }, w.basis);
                report.push_witness(w);
            }
        }
    }
    Ok(report)
}

/// `AW ∘ C(f ⊗ g) = (C(f) ⊗ C(g)) ∘ AW` for the maps of standard simplices
/// induced by `θ` and `φ`.
pub fn aw_naturality(theta: &DeltaMorphism, phi: &DeltaMorphism, max_degree: usize, normalized: bool) -> Result<VerificationReport> {
    let f = induced_by_delta(theta, max_degree)?;
    let g = induced_by_delta(phi, max_degree)?;
    let src = EzPair::new(f.source().clone(), g.source().clone(), normalized)?;
    let tgt = EzPair::new(f.target().clone(), g.target().clone(), normalized)?;
    let fg = SimplicialMap::tensor(&f, &g)?.between(src.ab.module.clone(), tgt.ab.module.clone())?;
    let c_fg = ChainModel::map_of(&src.ab, &tgt.ab, &fg)?;
    let cf = ChainModel::map_of(&src.a, &tgt.a, &f)?;
    let cg = ChainModel::map_of(&src.b, &tgt.b, &g)?;
    let lhs = tgt.aw()?.after(&c_fg)?;
    let rhs = ChainMap::tensor(&cf, &cg)?.after(&src.aw()?)?;
    let objects = vec![format!("θ={theta}"), format!("φ={phi}")];
    Ok(relabel(lhs.compare(&rhs, "aw-naturality"), "aw-naturality", objects))
}
