//! The Alexander–Whitney and shuffle maps on Z[Δ^1] ⊗ Z[Δ^1], and the
//! identity AW ∘ ∇ = id on normalized chains.

use std::sync::Arc;

use simplicial_bialgebra::ez::{enumerate_shuffles, EzPair};
use simplicial_bialgebra::simplicial::free_on_standard_simplex;

fn main() {
    let table = enumerate_shuffles(2, 1);
    println!("(2,1)-shuffles:");
    for s in &table.entries {
        println!("  α={:?} β={:?} sign={:+}", s.alpha, s.beta, s.sign);
    }

    let a = Arc::new(free_on_standard_simplex(1, 3));
    let pair = EzPair::new(a.clone(), a, true).expect("pair");
    let aw = pair.aw().expect("AW");
    let nabla = pair.shuffle().expect("∇");
    for n in 1..=2 {
        println!("\ndegree {n}");
        for j in 0..aw.source().rank(n) {
            println!("  AW {} ↦ {}", aw.source().label(n, j), aw.describe_column(n, j));
        }
        for j in 0..nabla.source().rank(n) {
            println!("  ∇  {} ↦ {}", nabla.source().label(n, j), nabla.describe_column(n, j));
        }
    }
    let mut report = aw.after(&nabla).expect("composable").check_identity("aw-nabla-identity");
    report.objects = vec!["Δ1".into(), "Δ1".into()];
    print!("\n{}", report.to_text(false));
}
