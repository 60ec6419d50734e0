//! Factor monotone maps into faces after degeneracies and read the words
//! back as operators on simplices.

use simplicial_bialgebra::delta::{canonical_factorization, epi_mono, DeltaMorphism};

fn main() {
    let f = DeltaMorphism::new(3, vec![0, 0, 2]).expect("monotone");
    let w = canonical_factorization(&f);
    println!("θ = {f}");
    println!("  canonical word: {w}");
    println!("  as an operator on simplices: {}", w.to_operator_string());
    let (s, i) = epi_mono(&f);
    println!("  epi {s}, mono {i}");

    println!("\nall maps [2] -> [1]:");
    for g in DeltaMorphism::all(2, 1) {
        println!("  {g:22} = {}", canonical_factorization(&g));
    }
}
