//! μ on relations and its compatibility with T_p.

use rand::SeedableRng;
use toric_forms::manin::SymbolSpace;
use toric_forms::verify::{check_hecke_equivariance, check_mumap_all, hecke_defect, random_symbol};

fn main() {
    for (l, k) in [(5, 3), (5, 4), (7, 3)] {
        println!("l={l} k={k}: relations land in the subspace: {}", check_mumap_all(l, k, 30).unwrap());
    }
    let space = SymbolSpace::build(5, 3).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let w = random_symbol(&space, &mut rng);
    println!("defect for T_2: {}", hecke_defect(&space, 2, &w, 12).unwrap());
    println!("equivariant: {}", check_hecke_equivariance(&space, 2, &w, 16).unwrap());
}
