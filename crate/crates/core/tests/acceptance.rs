//! The acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Two criteria are only partly attainable. AW∘∇ is the identity on
//! normalized chains but not on unnormalized ones, and the bialgebra square
//! for the pair transferred along Γ holds on some instances and fails on
//! others. For those the suite asserts what is true, including the concrete
//! counterexamples, and labels the line PARTIAL.

use std::sync::Arc;
use std::time::{Duration, Instant};

use simplicial_bialgebra::chain::{homology, induced_map_on_homology, ChainComplex};
use simplicial_bialgebra::dold_kan::{
    build_adjunction, counit, identity_functor_gate, lax_after_colax_check, round_trip_check,
    transferred_bialgebra_check, DoldKanObject,
};
use simplicial_bialgebra::ez::{
    nabla_symmetry, nabla_symmetry_with, unit_coherence_check_with, BialgebraInstance, EzPair, ShuffleFault, UnitFault,
};
use simplicial_bialgebra::linalg::Matrix;
use simplicial_bialgebra::monoid::{check_aw_multiplicative, to_dga, SimplicialRing};
use simplicial_bialgebra::report::VerificationReport;
use simplicial_bialgebra::simplicial::{free_on_nerve, free_on_standard_simplex, FiniteMonoid, SimplicialModule};
use simplicial_bialgebra::verify::{self, canonical_factorization_check, parse_objects, Config, Suite};

enum Outcome {
    Pass(String),
    Partial(String),
}

type Criterion = fn() -> Result<Outcome, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &VerificationReport) -> Result<(), String> {
    ensure(r.passed(), || r.to_text(false))
}

fn simplex(p: usize, d: usize) -> Arc<SimplicialModule> {
    Arc::new(free_on_standard_simplex(p, d).renamed(format!("Δ{p}")))
}

fn z_in(degree: usize) -> ChainComplex {
    let mut ranks = vec![0; degree + 1];
    ranks[degree] = 1;
    let diffs = (1..=degree).map(|n| Matrix::zeros(ranks[n - 1], ranks[n])).collect();
    ChainComplex::new(format!("Z[{degree}]"), ranks, diffs).unwrap()
}

fn cone() -> ChainComplex {
    ChainComplex::new("Z-2->Z", vec![1, 1], vec![Matrix::from_rows(&[vec![2]])]).unwrap()
}

fn test_complexes() -> Vec<ChainComplex> {
    vec![z_in(0), z_in(1), cone()]
}

fn pairs() -> Vec<(usize, usize)> {
    (0..=2).flat_map(|p| (0..=2).map(move |q| (p, q))).collect()
}

/// Counts instances of each clause whose two sides agree and are neither
/// zero nor the identity, recomputed from the face and degeneracy matrices.
fn clause_instances(m: &SimplicialModule) -> [usize; 5] {
    let d = m.max_degree();
    let mut counts = [0; 5];
    let nontrivial = |a: &Matrix, b: &Matrix| a == b && !a.is_zero() && !a.is_identity();
    for n in 2..=d {
        for j in 0..=n {
            for i in 0..j {
                let l = m.face(n - 1, i).mul(m.face(n, j)).unwrap();
                let r = m.face(n - 1, j - 1).mul(m.face(n, i)).unwrap();
                counts[0] += usize::from(nontrivial(&l, &r));
            }
        }
    }
    for n in 0..d.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let l = m.degeneracy(n + 1, i).mul(m.degeneracy(n, j)).unwrap();
                let r = m.degeneracy(n + 1, j + 1).mul(m.degeneracy(n, i)).unwrap();
                counts[1] += usize::from(nontrivial(&l, &r));
            }
        }
    }
    for n in 1..d {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let l = m.face(n + 1, i).mul(m.degeneracy(n, j)).unwrap();
                if i < j {
                    let r = m.degeneracy(n - 1, j - 1).mul(m.face(n, i)).unwrap();
                    counts[2] += usize::from(nontrivial(&l, &r));
                } else if i == j || i == j + 1 {
                    // the identity clause is nontrivial when the composite is
                    // built from non-identity factors
                    let id = Matrix::identity(m.rank(n));
                    counts[3] += usize::from(l == id && !m.degeneracy(n, j).is_identity());
                } else {
                    let r = m.degeneracy(n - 1, j).mul(m.face(n, i - 1)).unwrap();
                    counts[4] += usize::from(nontrivial(&l, &r));
                }
            }
        }
    }
    counts
}

fn criterion_1() -> Result<Outcome, String> {
    let mut modules: Vec<SimplicialModule> = (0..=3).map(|p| free_on_standard_simplex(p, 4)).collect();
    modules.push(free_on_nerve(&FiniteMonoid::cyclic(2), 3));
    let mut total = [0; 5];
    for m in &modules {
        passed(&m.validate())?;
        for (t, c) in total.iter_mut().zip(clause_instances(m)) {
            *t += c;
        }
    }
    ensure(total.iter().all(|&c| c > 0), || format!("some clause never exercised: {total:?}"))?;
    Ok(Outcome::Pass(format!(
        "Δ^0..Δ^3 at D=4 and nerve(Z/2) at D=3 valid; nontrivial instances per clause {total:?}"
    )))
}

fn criterion_2() -> Result<Outcome, String> {
    passed(&canonical_factorization_check(4))?;
    let count: usize = (0..=4)
        .flat_map(|q| (0..=4).map(move |p| simplicial_bialgebra::delta::DeltaMorphism::all(q, p).len()))
        .sum();
    Ok(Outcome::Pass(format!("{count} monotone maps with q, p <= 4 round-trip with q - t + s = p")))
}

fn criterion_3() -> Result<Outcome, String> {
    let d = 4;
    let mut unnormalized_failures = 0;
    for (p, q) in pairs() {
        let n = EzPair::new(simplex(p, d), simplex(q, d), true).map_err(|e| e.to_string())?;
        passed(&n.aw().unwrap().after(&n.shuffle().unwrap()).unwrap().check_identity("aw-nabla-identity"))?;
        let c = EzPair::new(simplex(p, d), simplex(q, d), false).map_err(|e| e.to_string())?;
        let r = c.aw().unwrap().after(&c.shuffle().unwrap()).unwrap().check_identity("aw-nabla-identity");
        // on C(A)⊗C(B) the composite keeps d_1 a ⊗ s_0 b from ∇(a⊗b), a ∈ A_1
        ensure(r.failed() && r.witnesses[0].level == 1, || r.to_text(false))?;
        unnormalized_failures += 1;
    }
    Ok(Outcome::Partial(format!(
        "exact identity on N(A)⊗N(B) for all 9 pairs at levels <= 4; \
         on C(A)⊗C(B) it is false ({unnormalized_failures}/9 pairs fail with a level-1 witness, \
         e.g. d_1 a ⊗ s_0 b survives), so that half is not attainable"
    )))
}

fn criterion_4() -> Result<Outcome, String> {
    let d = 3;
    let mut n = 0;
    for normalized in [false, true] {
        for x in 0..=2 {
            for y in 0..=2 {
                for z in 0..=2 {
                    for w in 0..=2 {
                        let inst = BialgebraInstance::new(simplex(x, d), simplex(y, d), simplex(z, d), simplex(w, d), normalized)
                            .map_err(|e| e.to_string())?;
                        passed(&inst.check().map_err(|e| e.to_string())?)?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(Outcome::Pass(format!("{n} instances (81 tuples x 2 models) agree entrywise at levels <= 3")))
}

fn criterion_5() -> Result<Outcome, String> {
    let d = 4;
    for normalized in [false, true] {
        for (p, q) in pairs() {
            passed(&nabla_symmetry(&simplex(p, d), &simplex(q, d), normalized).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(Outcome::Pass("∇ ∘ τ = C(σ) ∘ ∇ for 9 pairs in both models at levels <= 4".into()))
}

fn criterion_6() -> Result<Outcome, String> {
    let mut lines = 0;
    for objects in ["delta:1,delta:1", "delta:2,delta:1"] {
        for normalized in [true, false] {
            let cfg = Config {
                objects: Some(parse_objects(objects).unwrap()),
                max_level: 3,
                normalized,
                ..Config::default()
            };
            let reports = verify::run(Suite::Homotopy, &cfg).map_err(|e| e.to_string())?;
            ensure(reports.len() == 2, || format!("expected nabla-aw and aw-symmetry, got {}", reports.len()))?;
            for r in &reports {
                passed(r)?;
                ensure(r.details.iter().any(|l| l.starts_with("h 3")), || {
                    format!("{} on {objects}: homotopy does not reach degree 3", r.check)
                })?;
                lines += r.details.len();
            }
        }
    }
    Ok(Outcome::Pass(format!(
        "integer homotopies for ∇∘AW ≃ id and AW symmetry on Δ1⊗Δ1, Δ2⊗Δ1 (both models), \
         re-verified by substitution, homology maps agree; {lines} serialized lines"
    )))
}

fn criterion_7() -> Result<Outcome, String> {
    let d = 3;
    let mut objects: Vec<DoldKanObject> = (0..=2).map(|p| DoldKanObject::Simplicial(simplex(p, d))).collect();
    objects.push(DoldKanObject::Simplicial(Arc::new(free_on_nerve(&FiniteMonoid::cyclic(2), d))));
    objects.extend(test_complexes().into_iter().map(|c| DoldKanObject::Chain(Arc::new(c))));
    for obj in &objects {
        passed(&build_adjunction(obj, d).map_err(|e| e.to_string())?.report)?;
    }
    for c in test_complexes() {
        let e = counit(&c, d).map_err(|e| e.to_string())?;
        let c = c.resized(d);
        ensure(e.complex().ranks() == c.ranks(), || format!("NΓ({}) has ranks {:?}", c.name(), e.complex().ranks()))?;
        for n in 0..d {
            let h = induced_map_on_homology(&e.map, n).map_err(|e| e.to_string())?;
            let hc = homology(&c, n).map_err(|e| e.to_string())?;
            ensure(h.source.describe() == hc.describe() && h.target.describe() == hc.describe(), || {
                format!("H_{n} mismatch for {}", c.name())
            })?;
        }
    }
    Ok(Outcome::Pass(format!(
        "triangles, unimodular unit and counit on {} objects; NΓ(C) ≅ C for Z[0], Z[1], Z-2->Z",
        objects.len()
    )))
}

fn criterion_8() -> Result<Outcome, String> {
    let d = 2;
    for (p, q) in [(0, 1), (1, 1), (2, 1)] {
        passed(&round_trip_check(&simplex(p, d), &simplex(q, d)).map_err(|e| e.to_string())?)?;
    }
    let cs = test_complexes();
    for x in &cs {
        for y in &cs {
            passed(&lax_after_colax_check(x, y, d).map_err(|e| e.to_string())?)?;
        }
    }
    let (z0, z1) = (&cs[0], &cs[1]);
    passed(&identity_functor_gate(z0, z1, z1, z0).map_err(|e| e.to_string())?)?;
    let mut holds = 0;
    let mut fails = 0;
    for x in &cs {
        for y in &cs {
            for z in &cs {
                for w in &cs {
                    let r = transferred_bialgebra_check(x, y, z, w, d).map_err(|e| e.to_string())?;
                    if r.passed() {
                        holds += 1;
                    } else {
                        ensure(!r.witnesses.is_empty(), || "fail without witness".into())?;
                        fails += 1;
                    }
                }
            }
        }
    }
    passed(&transferred_bialgebra_check(z0, z0, z0, z0, d).map_err(|e| e.to_string())?)?;
    let bad = transferred_bialgebra_check(z0, z1, z1, z0, d).map_err(|e| e.to_string())?;
    ensure(bad.failed() && bad.witnesses[0].level == 1, || bad.to_text(false))?;
    Ok(Outcome::Partial(format!(
        "round trip recovers AW; ℓ_Γ∘c_Γ = id on 9 pairs; identity-functor gate passes; \
         transferred square holds on {holds}/81 tuples and fails with witnesses on {fails}/81 \
         (e.g. Z[0],Z[1],Z[1],Z[0] at level 1), so the general claim is not attainable"
    )))
}

fn criterion_9() -> Result<Outcome, String> {
    let r = SimplicialRing::from_nerve(&FiniteMonoid::cyclic(2), 3).map_err(|e| e.to_string())?;
    passed(&r.validate().map_err(|e| e.to_string())?)?;
    for normalized in [true, false] {
        let a = to_dga(&r, normalized).map_err(|e| e.to_string())?;
        passed(&a.check_leibniz())?;
        passed(&a.check_associativity().map_err(|e| e.to_string())?)?;
        passed(&a.check_unit().map_err(|e| e.to_string())?)?;
    }
    let r2 = SimplicialRing::from_nerve(&FiniteMonoid::cyclic(2), 2).map_err(|e| e.to_string())?;
    for normalized in [true, false] {
        passed(&check_aw_multiplicative(&r2, &r2, normalized, None).map_err(|e| e.to_string())?)?;
    }
    Ok(Outcome::Pass(
        "nerve(Z/2) DGA associative, unital, Leibniz; AW multiplicative on (Z/2, Z/2) at level 2".into(),
    ))
}

fn concrete(r: &VerificationReport, what: &str) -> Result<(), String> {
    ensure(r.failed() && r.witnesses.iter().any(|w| w.basis != "-"), || {
        format!("{what} fault not detected with a concrete witness:\n{}", r.to_text(false))
    })
}

fn criterion_10() -> Result<Outcome, String> {
    let a = free_on_standard_simplex(2, 3).with_face_entry(2, 1, 0, 0, 5).map_err(|e| e.to_string())?;
    concrete(&a.validate(), "face")?;

    let s = simplex(1, 3);
    let pair = EzPair::new(s.clone(), s.clone(), false).map_err(|e| e.to_string())?;
    let bad = pair.shuffle_with(Some(&ShuffleFault::standard())).map_err(|e| e.to_string())?;
    concrete(&bad.check("nabla-chain-map"), "shuffle (chain map)")?;
    let s2 = simplex(1, 2);
    let inst = BialgebraInstance::new(s2.clone(), s2.clone(), s2.clone(), s2.clone(), false)
        .map_err(|e| e.to_string())?
        .with_fault(ShuffleFault::standard());
    concrete(&inst.check().map_err(|e| e.to_string())?, "shuffle (bialgebra)")?;
    let z2 = SimplicialRing::from_nerve(&FiniteMonoid::cyclic(2), 2).map_err(|e| e.to_string())?;
    let r = check_aw_multiplicative(&z2, &z2, false, Some(&ShuffleFault::standard())).map_err(|e| e.to_string())?;
    concrete(&r, "shuffle (aw-multiplicative)")?;
    ensure(r.witnesses.iter().any(|w| w.level == 2), || "no degree-2 witness".into())?;

    let r = nabla_symmetry_with(&s, &simplex(2, 3), true, &|p, q| p + q).map_err(|e| e.to_string())?;
    concrete(&r, "koszul")?;

    let r = unit_coherence_check_with(&s, true, Some(UnitFault { scale: 2 })).map_err(|e| e.to_string())?;
    concrete(&r, "unit")?;
    Ok(Outcome::Pass(
        "corrupted face, flipped shuffle sign, wrong Koszul exponent and scaled unit all fail with witnesses".into(),
    ))
}

const BUDGETS: [(Criterion, Duration); 10] = [
    (criterion_1, Duration::from_secs(1)),
    (criterion_2, Duration::from_secs(1)),
    (criterion_3, Duration::from_secs(5)),
    (criterion_4, Duration::from_secs(120)),
    (criterion_5, Duration::from_secs(5)),
    (criterion_6, Duration::from_secs(10)),
    (criterion_7, Duration::from_secs(5)),
    (criterion_8, Duration::from_secs(30)),
    (criterion_9, Duration::from_secs(10)),
    (criterion_10, Duration::from_secs(5)),
];

fn main() {
    // `cargo test` passes harness flags; a filter argument selects criteria
    let filter: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failures = 0;
    for (k, (run, budget)) in BUDGETS.iter().enumerate() {
        let n = k + 1;
        if !filter.is_empty() && !filter.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        let over = t > *budget;
        let (tag, text) = match outcome {
            Ok(_) if over => ("FAIL", format!("exceeded budget of {:?}", budget)),
            Ok(Outcome::Pass(s)) => ("PASS", s),
            Ok(Outcome::Partial(s)) => ("PARTIAL", s),
            Err(e) => ("FAIL", e),
        };
        if tag == "FAIL" {
            failures += 1;
        }
        println!("criterion {n:2}: {tag:7} ({:.2}s) {text}", t.as_secs_f64());
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
