//! The differential graded algebra on chains of the nerve of Z/2, and AW as
//! a map of algebras.

use simplicial_bialgebra::monoid::{check_aw_multiplicative, to_dga, SimplicialRing};
use simplicial_bialgebra::simplicial::FiniteMonoid;

fn main() {
    let r = SimplicialRing::from_nerve(&FiniteMonoid::cyclic(2), 3).expect("ring");
    print!("{}", r.validate().expect("validate").to_text(false));
    let a = to_dga(&r, true).expect("dga");
    println!("normalized chain ranks: {:?}", a.complex.ranks());
    for n in 0..=2 {
        for j in 0..a.product.source().rank(n) {
            println!("  μ({}) = {}", a.product.source().label(n, j), a.product.describe_column(n, j));
        }
    }
    print!("{}", a.check_associativity().expect("assoc").to_text(false));
    print!("{}", a.check_unit().expect("unit").to_text(false));

    let r2 = SimplicialRing::from_nerve(&FiniteMonoid::cyclic(2), 2).expect("ring");
    print!("{}", check_aw_multiplicative(&r2, &r2, true, None).expect("check").to_text(false));
}
