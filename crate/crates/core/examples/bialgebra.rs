//! The compatibility square between AW and ∇ for one 4-tuple of standard
//! simplices, in both chain models, and what a wrong shuffle sign does.

use std::sync::Arc;

use simplicial_bialgebra::ez::{BialgebraInstance, ShuffleFault};
use simplicial_bialgebra::simplicial::free_on_standard_simplex;

fn main() {
    let d = 3;
    let s = |p| Arc::new(free_on_standard_simplex(p, d).renamed(format!("Δ{p}")));
    for normalized in [false, true] {
        let inst = BialgebraInstance::new(s(1), s(2), s(1), s(0), normalized).expect("instance");
        let lhs = inst.lhs().expect("lhs");
        println!("{} chains: rank of the source in degree 2 is {}", if normalized { "normalized" } else { "unnormalized" }, lhs.source().rank(2));
        print!("{}", inst.check().expect("check").to_text(false));
    }

    let inst = BialgebraInstance::new(s(1), s(1), s(1), s(1), false)
        .expect("instance")
        .with_fault(ShuffleFault::standard());
    println!("\nwith a flipped shuffle sign:");
    print!("{}", inst.check().expect("check").to_text(false));
}
