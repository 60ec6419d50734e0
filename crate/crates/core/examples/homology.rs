//! Smith normal form and integral homology of a few complexes.

use simplicial_bialgebra::chain::{homology, moore_model, ChainComplex};
use simplicial_bialgebra::linalg::{smith_normal_form, Matrix};
use simplicial_bialgebra::simplicial::{free_on_nerve, FiniteMonoid};

fn main() {
    let m = Matrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("invariant factors: {:?}", snf.invariant_factors);
    snf.verify(&m).expect("U M V = S");

    let c = ChainComplex::new(
        "RP^2-like",
        vec![1, 1, 1],
        vec![Matrix::from_rows(&[vec![0]]), Matrix::from_rows(&[vec![2]])],
    )
    .expect("complex");
    for n in 0..=1 {
        println!("H_{n}({}) = {}", c.name(), homology(&c, n).expect("homology").describe());
    }

    // the nerve of Z/3 computes group homology in low degrees
    let b = free_on_nerve(&FiniteMonoid::cyclic(3), 4);
    let n = moore_model(&b).expect("Moore model");
    for k in 0..=3 {
        println!("H_{k}(BZ/3) = {}", homology(&n.complex, k).expect("homology").describe());
    }
}
