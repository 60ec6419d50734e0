//! An explicit integer chain homotopy between ∇ ∘ AW and the identity on
//! N(Z[Δ^1] ⊗ Z[Δ^1]), checked by substitution.

use std::sync::Arc;

use simplicial_bialgebra::chain::{induced_map_on_homology, solve_homotopy, ChainMap};
use simplicial_bialgebra::ez::EzPair;
use simplicial_bialgebra::simplicial::free_on_standard_simplex;

fn main() {
    // one level above the degrees we want certified
    let a = Arc::new(free_on_standard_simplex(1, 4));
    let pair = EzPair::new(a.clone(), a, true).expect("pair");
    let f = pair.shuffle().unwrap().after(&pair.aw().unwrap()).unwrap();
    let id = ChainMap::identity(pair.ab.complex().clone());
    let h = solve_homotopy(&f, &id).expect("solvable system").expect("homotopy exists");
    print!("{}", h.serialize());
    print!("{}", h.verify().expect("defect").to_text(false));
    for n in 0..=2 {
        let m = induced_map_on_homology(&f, n).expect("homology");
        println!("H_{n} = {}, induced map is identity: {}", m.source.describe(), m.is_identity());
    }
}
