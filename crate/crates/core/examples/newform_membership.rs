//! Writes the eta-product newforms of levels 7 and 5 as combinations of pairs.

use toric_forms::arith::format_rational;
use toric_forms::verify::{check_newform_membership, eta_product};

fn main() {
    for (l, k, eta) in [(7, 3, [(1, 3), (7, 3)]), (5, 4, [(1, 4), (5, 4)])] {
        let f = eta_product(&eta, 40).unwrap();
        println!("l={l} k={k}: f = {}", f.truncate(8));
        match check_newform_membership(l, k, &f, 40).unwrap() {
            Some(combo) => {
                for (label, c) in combo {
                    println!("  {} * {label}", format_rational(&c));
                }
            }
            None => println!("  not in the pair span"),
        }
    }
}
