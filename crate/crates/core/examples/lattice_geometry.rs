//! Index-p sublattices, their hull segments, duals, rays, and the Euclidean
//! threads of I(D).

use toric_forms::lattice::{enumerate_h, sublattices_index_p, threads};

fn main() {
    let p = 3;
    for s in sublattices_index_p(p).unwrap() {
        let segs: Vec<String> = s.boundary_segments().iter().map(ToString::to_string).collect();
        println!("{s}  dual {}  segments {}", s.dual(), segs.join(" "));
        println!("    rays {:?}", s.rays());
    }
    let h: Vec<String> = enumerate_h(p).iter().map(ToString::to_string).collect();
    println!("H({p}) = {}", h.join(" "));
    for t in threads(7) {
        let steps: Vec<String> = t.iter().map(ToString::to_string).collect();
        println!("{}", steps.join(" -> "));
    }
}
