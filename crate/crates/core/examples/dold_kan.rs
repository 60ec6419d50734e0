//! Γ of a small complex, the unit and counit of the Dold–Kan equivalence,
//! and the structure maps transported along it.

use simplicial_bialgebra::chain::ChainComplex;
use simplicial_bialgebra::dold_kan::{build_adjunction, lax_after_colax_check, transferred_bialgebra_check, DoldKanObject, Gamma};
use simplicial_bialgebra::linalg::Matrix;

fn main() {
    let d = 3;
    let cone = ChainComplex::new("Z-2->Z", vec![1, 1], vec![Matrix::from_rows(&[vec![2]])]).expect("complex");
    let g = Gamma::new(&cone, d).expect("Γ");
    println!("Γ({}) ranks: {:?}", cone.name(), g.module.ranks());
    for s in g.layout.summands(2) {
        println!("  level 2 summand σ={} at offset {}", s.sigma, s.offset);
    }
    print!("{}", g.module.validate().to_text(false));

    let adj = build_adjunction(&DoldKanObject::Chain(cone.clone().into()), d).expect("adjunction");
    print!("{}", adj.report.to_text(false));

    let z0 = ChainComplex::new("Z[0]", vec![1], vec![]).expect("complex");
    print!("{}", lax_after_colax_check(&cone, &z0, 2).expect("transfer").to_text(false));

    // the transported square does not hold in general
    let z1 = ChainComplex::new("Z[1]", vec![0, 1], vec![Matrix::zeros(0, 1)]).expect("complex");
    let r = transferred_bialgebra_check(&z0, &z1, &z1, &z0, 2).expect("check");
    print!("{}", r.to_text(false));
}
