//! Manin symbol spaces, the involution, R-symbols and Hecke operators.

use toric_forms::arith::format_rational;
use toric_forms::manin::{Sign, SymbolSpace};

fn main() {
    for (l, k) in [(5, 2), (5, 3), (5, 4), (7, 3)] {
        let s = SymbolSpace::build(l, k).unwrap();
        println!(
            "l={l} k={k}: {} generators, relation rank {}, quotient {} = {} (+) + {} (-)",
            s.num_generators(),
            s.relation_rank(),
            s.quotient_dim(),
            s.eigenspace_dim(Sign::Plus),
            s.eigenspace_dim(Sign::Minus)
        );
    }
    let s = SymbolSpace::build(5, 3).unwrap();
    let r = s.r_symbol(0, 1, Some(Sign::Plus));
    let t2 = s.hecke_tn(&r, 2).unwrap();
    print!("T_2 R+(0,1) =");
    for (idx, c) in t2.reduced.iter() {
        let (i, (u, v)) = s.decode(idx);
        print!(" {}*x^{i}y^{}({u},{v})", format_rational(c), s.weight() as usize - 2 - i);
    }
    println!();
}
