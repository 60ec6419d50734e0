//! The check registry and the code that runs one check on one instance.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::objects::ObjectSpec;
use super::{Config, Fault, Suite};
use crate::chain::{induced_map_on_homology, koszul_swap_with, normalized_chains, solve_homotopy, ChainMap, ChainModel};
use crate::delta::{canonical_factorization, epi_mono, compose, DeltaMorphism, Generator};
use crate::dold_kan::{
    build_adjunction, gamma_lax_associativity, identity_functor_gate, lax_after_colax_check, round_trip_check,
    transferred_bialgebra_check, DoldKanObject, Gamma,
};
use crate::error::Result;
use crate::ez::{
    aw_colax_associativity, aw_naturality, nabla_lax_associativity, nabla_symmetry_with, unit_coherence_check_with,
    BialgebraInstance, EzPair, ShuffleFault, UnitFault,
};
use crate::linalg::Int;
use crate::monoid::{check_aw_multiplicative, to_dga};
use crate::report::{VerificationReport, Witness};
use crate::simplicial::{swap_between, SimplicialModule};

/// What a check consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Input {
    /// Generates its own data.
    None,
    Simplicial,
    Chain,
    /// Either kind, kept as given.
    Any,
    /// A monoid nerve with its ring structure.
    Ring,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckInfo {
    pub name: &'static str,
    pub suite: Suite,
    pub arity: usize,
    pub input: Input,
    /// Runs only when named with `--check`.
    pub explicit_only: bool,
    pub description: &'static str,
}

const fn check(name: &'static str, suite: Suite, arity: usize, input: Input, description: &'static str) -> CheckInfo {
    CheckInfo {
        name,
        suite,
        arity,
        input,
        explicit_only: false,
        description,
    }
}

pub const CHECKS: &[CheckInfo] = &[
    check("simplicial-identities", Suite::Axioms, 1, Input::Simplicial, "all simplicial identities hold"),
    check("canonical-factorization", Suite::Axioms, 0, Input::None, "every Δ morphism has a unique canonical word"),
    check("normalized-models", Suite::Axioms, 1, Input::Simplicial, "quotient and Moore models are comparable chain complexes"),
    check("aw-chain-map", Suite::Axioms, 2, Input::Simplicial, "AW commutes with differentials"),
    check("nabla-chain-map", Suite::Axioms, 2, Input::Simplicial, "∇ commutes with differentials"),
    check("normalized-descent", Suite::Axioms, 2, Input::Simplicial, "AW and ∇ descend to normalized chains"),
    check("aw-nabla-identity", Suite::Axioms, 2, Input::Simplicial, "AW ∘ ∇ = id"),
    check("nabla-symmetry", Suite::Axioms, 2, Input::Simplicial, "∇ ∘ τ = C(σ) ∘ ∇"),
    check("aw-colax-associativity", Suite::Axioms, 3, Input::Simplicial, "AW is coassociative"),
    check("nabla-lax-associativity", Suite::Axioms, 3, Input::Simplicial, "∇ is associative"),
    check("unit-coherence", Suite::Axioms, 1, Input::Simplicial, "AW and ∇ respect the unit Z"),
    check("aw-naturality", Suite::Axioms, 0, Input::None, "AW is natural for seeded random Δ maps"),
    check("bialgebra", Suite::Bialgebra, 4, Input::Simplicial, "AW ∘ C(σ) ∘ ∇ = (∇ ⊗ ∇) ∘ τ ∘ (AW ⊗ AW)"),
    check("nabla-aw", Suite::Homotopy, 2, Input::Simplicial, "∇ ∘ AW is homotopic to id, identity on homology"),
    check("aw-symmetry", Suite::Homotopy, 2, Input::Simplicial, "AW ∘ C(σ) is homotopic to τ ∘ AW"),
    check("gamma-validate", Suite::DoldKan, 1, Input::Chain, "Γ(C) is a simplicial abelian group"),
    check("dold-kan-adjunction", Suite::DoldKan, 1, Input::Any, "unit and counit are inverse isomorphisms satisfying both triangles"),
    check("colax-lax-round-trip", Suite::DoldKan, 2, Input::Simplicial, "transporting AW through Γ and back recovers AW"),
    check("gamma-lax-colax-identity", Suite::DoldKan, 2, Input::Chain, "ℓ_Γ ∘ c_Γ = id"),
    check("gamma-lax-associativity", Suite::DoldKan, 3, Input::Chain, "ℓ_Γ is associative"),
    check("identity-functor-gate", Suite::DoldKan, 4, Input::Chain, "harness self-test with the identity functor"),
    CheckInfo {
        name: "gamma-bialgebra",
        suite: Suite::DoldKan,
        arity: 4,
        input: Input::Chain,
        explicit_only: true,
        description: "bialgebra square for ℓ_Γ, c_Γ (does not hold in general; explicit only)",
    },
    check("simplicial-ring", Suite::Monoid, 1, Input::Ring, "the nerve ring is a simplicial ring"),
    check("dga-associativity", Suite::Monoid, 1, Input::Ring, "C(m) ∘ ∇ is associative"),
    check("dga-unit", Suite::Monoid, 1, Input::Ring, "C(m) ∘ ∇ is unital"),
    check("dga-leibniz", Suite::Monoid, 1, Input::Ring, "C(m) ∘ ∇ satisfies the Leibniz rule"),
    check("aw-multiplicative", Suite::Monoid, 2, Input::Ring, "AW is a map of algebras"),
];

pub fn find(name: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.name == name)
}

const Z0: &str = "complex:[1]";
const Z1: &str = "complex:[0,1;]";
const CONE: &str = "complex:[1,1;2]";

fn product(items: &[&str], k: usize) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                items.iter().map(move |s| {
                    let mut t = t.clone();
                    t.push(s.to_string());
                    t
                })
            })
            .collect();
    }
    out
}

fn tuples(list: &[&[&str]]) -> Vec<Vec<String>> {
    list.iter().map(|t| t.iter().map(|s| s.to_string()).collect()).collect()
}

/// Instances used when no `--objects` are given.
pub fn default_instances(info: &CheckInfo) -> Vec<Vec<String>> {
    let deltas = ["delta:0", "delta:1", "delta:2"];
    let complexes = [Z0, Z1, CONE];
    match info.name {
        "simplicial-identities" | "normalized-models" | "unit-coherence" => {
            tuples(&[&["delta:0"], &["delta:1"], &["delta:2"], &["const:Z"], &["nerve:z2"]])
        }
        "nabla-aw" | "aw-symmetry" => tuples(&[&["delta:1", "delta:1"], &["delta:2", "delta:1"]]),
        "colax-lax-round-trip" => tuples(&[&["delta:1", "delta:0"], &["delta:1", "delta:1"]]),
        "dold-kan-adjunction" => tuples(&[&["delta:1"], &["nerve:z2"], &[Z0], &[Z1], &[CONE]]),
        "gamma-lax-associativity" => tuples(&[&[Z0, Z1, CONE], &[Z1, Z1, Z0], &[CONE, Z0, Z1]]),
        "identity-functor-gate" => tuples(&[&[Z0, Z1, Z1, Z0], &[CONE, Z1, Z0, CONE]]),
        "gamma-bialgebra" => tuples(&[&[Z0, Z0, Z0, Z0], &[Z0, Z1, Z1, Z0]]),
        "aw-multiplicative" => tuples(&[&["nerve:z2", "nerve:z2"], &["nerve:z2", "nerve:z3"]]),
        _ => match info.input {
            Input::None => vec![Vec::new()],
            Input::Simplicial => product(&deltas, info.arity),
            Input::Chain => product(&complexes, info.arity),
            Input::Ring => tuples(&[&["nerve:z2"], &["nerve:z3"]]),
            Input::Any => product(&deltas, info.arity),
        },
    }
}

fn module(spec: &ObjectSpec, d: usize, cfg: &Config) -> Result<Arc<SimplicialModule>> {
    let m = spec.module(d)?;
    if cfg.inject != Some(Fault::Face) {
        return Ok(m);
    }
    let n = d.min(2);
    let old = m.face(n, 0).get(0, 0);
    let bumped = i64::try_from(old + Int::from(1)).unwrap_or(1);
    Ok(Arc::new(m.with_face_entry(n, 0, 0, 0, bumped)?))
}

fn shuffle_fault(cfg: &Config) -> Option<ShuffleFault> {
    (cfg.inject == Some(Fault::Shuffle)).then(ShuffleFault::standard)
}

fn koszul_exponent(cfg: &Config) -> fn(usize, usize) -> usize {
    if cfg.inject == Some(Fault::Koszul) {
        |p, q| p + q
    } else {
        |p, q| p * q
    }
}

fn finish(mut r: VerificationReport, info: &CheckInfo, objects: &[ObjectSpec], level: usize) -> VerificationReport {
    r.check = info.name.to_string();
    if !objects.is_empty() {
        r.objects = objects.iter().map(|o| o.descriptor.clone()).collect();
    }
    r.max_level = level;
    r
}

/// Runs one check on one instance. Arity-0 checks may return several
/// reports.
pub fn run_instance(info: &CheckInfo, objs: &[ObjectSpec], cfg: &Config) -> Result<Vec<VerificationReport>> {
    let d = cfg.max_level;
    let norm = cfg.normalized;
    let fault = shuffle_fault(cfg);
    let modules = |level: usize| -> Result<Vec<Arc<SimplicialModule>>> {
        objs.iter().map(|o| module(o, level, cfg)).collect()
    };
    let complexes = || -> Result<Vec<_>> { objs.iter().map(|o| o.complex(d)).collect() };
    let r = match info.name {
        "simplicial-identities" => modules(d)?[0].validate(),
        "canonical-factorization" => canonical_factorization_check(d + 1),
        "normalized-models" => normalized_chains(&modules(d)?[0])?.check(),
        "aw-chain-map" | "nabla-chain-map" | "normalized-descent" | "aw-nabla-identity" => {
            let m = modules(d)?;
            let pair = EzPair::new(m[0].clone(), m[1].clone(), norm)?;
            match info.name {
                "aw-chain-map" => pair.aw()?.check(info.name),
                "nabla-chain-map" => pair.shuffle_with(fault.as_ref())?.check(info.name),
                "normalized-descent" => pair.descent_report()?,
                _ => pair.aw()?.after(&pair.shuffle_with(fault.as_ref())?)?.check_identity(info.name),
            }
        }
        "nabla-symmetry" => {
            let m = modules(d)?;
            nabla_symmetry_with(&m[0], &m[1], norm, &koszul_exponent(cfg))?
        }
        "aw-colax-associativity" => {
            let m = modules(d)?;
            aw_colax_associativity(&m[0], &m[1], &m[2], norm)?
        }
        "nabla-lax-associativity" => {
            let m = modules(d)?;
            nabla_lax_associativity(&m[0], &m[1], &m[2], norm)?
        }
        "unit-coherence" => {
            let unit_fault = (cfg.inject == Some(Fault::Unit)).then_some(UnitFault { scale: 2 });
            unit_coherence_check_with(&modules(d)?[0], norm, unit_fault)?
        }
        "aw-naturality" => return naturality_trials(cfg),
        "bialgebra" => {
            let m = modules(d)?;
            let mut inst = BialgebraInstance::new(m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone(), norm)?;
            if let Some(f) = fault {
                inst = inst.with_fault(f);
            }
            inst.check()?
        }
        "nabla-aw" => {
            let m = modules(d + 1)?;
            nabla_aw(&m[0], &m[1], norm, fault.as_ref(), d)?
        }
        "aw-symmetry" => {
            let m = modules(d + 1)?;
            aw_symmetry(&m[0], &m[1], norm, koszul_exponent(cfg), d)?
        }
        "gamma-validate" => Gamma::new(&complexes()?[0], d)?.module.validate(),
        "dold-kan-adjunction" => {
            let obj = if objs[0].is_complex() {
                DoldKanObject::Chain(objs[0].complex(d)?)
            } else {
                DoldKanObject::Simplicial(modules(d)?[0].clone())
            };
            build_adjunction(&obj, d)?.report
        }
        "colax-lax-round-trip" => {
            let m = modules(d)?;
            round_trip_check(&m[0], &m[1])?
        }
        "gamma-lax-colax-identity" => {
            let c = complexes()?;
            lax_after_colax_check(&c[0], &c[1], d)?
        }
        "gamma-lax-associativity" => {
            let c = complexes()?;
            gamma_lax_associativity(&c[0], &c[1], &c[2], d)?
        }
        "identity-functor-gate" => {
            let c = complexes()?;
            identity_functor_gate(&c[0], &c[1], &c[2], &c[3])?
        }
        "gamma-bialgebra" => {
            let c = complexes()?;
            transferred_bialgebra_check(&c[0], &c[1], &c[2], &c[3], d)?
        }
        "simplicial-ring" | "dga-associativity" | "dga-unit" | "dga-leibniz" | "aw-multiplicative" => {
            let mut rings = Vec::new();
            for o in objs {
                match o.ring(d)? {
                    Some(r) => rings.push(r),
                    None => {
                        let names = objs.iter().map(|o| o.descriptor.clone()).collect();
                        let reason = format!("{} carries no ring structure; use nerve:z<n>", o.descriptor);
                        return Ok(vec![VerificationReport::skipped(info.name, names, d, reason)]);
                    }
                }
            }
            match info.name {
                "simplicial-ring" => rings[0].validate()?,
                "dga-associativity" => to_dga(&rings[0], norm)?.check_associativity()?,
                "dga-unit" => to_dga(&rings[0], norm)?.check_unit()?,
                "dga-leibniz" => to_dga(&rings[0], norm)?.check_leibniz(),
                _ => check_aw_multiplicative(&rings[0], &rings[1], norm, fault.as_ref())?,
            }
        }
        other => unreachable!("check {other} is registered but not implemented"),
    };
    Ok(vec![finish(r, info, objs, d)])
}

/// Canonical words for every `f: [q] -> [p]` with `p, q <= top`: the word
/// evaluates to `f`, is in canonical order, has `q - t + s = p`, and its
/// epi-mono split composes back to `f`.
pub fn canonical_factorization_check(top: usize) -> VerificationReport {
    let mut r = VerificationReport::new("canonical-factorization", Vec::new(), top);
    for q in 0..=top {
        for p in 0..=top {
            for f in DeltaMorphism::all(q, p) {
                let w = canonical_factorization(&f);
                let s = w.generators().iter().filter(|g| matches!(g, Generator::Face(_))).count();
                let t = w.generators().len() - s;
                let (surj, inj) = epi_mono(&f);
                let split_ok = compose(&inj, &surj).map(|g| g == f).unwrap_or(false);
                if w.evaluate() != f || !w.is_canonical() || q + s != p + t || !split_ok {
                    r.push_witness(Witness {
                        level: q,
                        basis: f.to_string(),
                        left: w.to_string(),
                        right: format!("s={s} t={t}"),
                    });
                }
            }
        }
    }
    r
}

fn naturality_trials(cfg: &Config) -> Result<Vec<VerificationReport>> {
    const TRIALS: usize = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(TRIALS);
    let pick = |rng: &mut ChaCha8Rng| {
        let q = rng.gen_range(0..=2);
        let p = rng.gen_range(0..=2);
        DeltaMorphism::all(q, p).choose(rng).cloned().expect("monotone maps exist")
    };
    for _ in 0..TRIALS {
        let theta = pick(&mut rng);
        let phi = pick(&mut rng);
        let mut r = aw_naturality(&theta, &phi, cfg.max_level, cfg.normalized)?;
        r.details.push(format!("seed {}", cfg.seed));
        out.push(r);
    }
    Ok(out)
}

/// Searches for an integer homotopy `f ≃ g` and checks that the maps agree
/// on homology in degrees `0..=level`; `f`, `g` are built one level above.
fn homotopy_report(f: &ChainMap, g: &ChainMap, check: &str, level: usize) -> Result<VerificationReport> {
    let mut r = match solve_homotopy(f, g)? {
        None => {
            let mut r = VerificationReport::new(check, Vec::new(), level);
            r.fail_with("no integer chain homotopy exists", 0);
            return Ok(r);
        }
        Some(h) => {
            let mut r = h.verify()?;
            r.details.extend(h.serialize().lines().map(str::to_string));
            r
        }
    };
    for n in 0..=level.min(f.valid().saturating_sub(1)) {
        let hf = induced_map_on_homology(f, n)?;
        let hg = induced_map_on_homology(g, n)?;
        if hf.matrix != hg.matrix {
            r.push_witness(Witness {
                level: n,
                basis: format!("H_{n}"),
                left: format!("{:?}", hf.matrix.to_dense()),
                right: format!("{:?}", hg.matrix.to_dense()),
            });
        }
    }
    Ok(r)
}

fn nabla_aw(
    a: &Arc<SimplicialModule>,
    b: &Arc<SimplicialModule>,
    normalized: bool,
    fault: Option<&ShuffleFault>,
    level: usize,
) -> Result<VerificationReport> {
    let pair = EzPair::new(a.clone(), b.clone(), normalized)?;
    let f = pair.shuffle_with(fault)?.after(&pair.aw()?)?;
    let g = ChainMap::identity(pair.ab.complex().clone());
    homotopy_report(&f, &g, "nabla-aw", level)
}

fn aw_symmetry(
    a: &Arc<SimplicialModule>,
    b: &Arc<SimplicialModule>,
    normalized: bool,
    exponent: fn(usize, usize) -> usize,
    level: usize,
) -> Result<VerificationReport> {
    let ab = EzPair::new(a.clone(), b.clone(), normalized)?;
    let ba = EzPair::new(b.clone(), a.clone(), normalized)?;
    let sigma = swap_between(a, b, ab.ab.module.clone(), ba.ab.module.clone())?;
    let c_sigma = ChainModel::map_of(&ab.ab, &ba.ab, &sigma)?;
    let f = ba.aw()?.after(&c_sigma)?;
    let tau = koszul_swap_with(ab.a.complex(), ab.b.complex(), &exponent)?;
    let g = tau.after(&ab.aw()?)?;
    homotopy_report(&f, &g, "aw-symmetry", level)
}
