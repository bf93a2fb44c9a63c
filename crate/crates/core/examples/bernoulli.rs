//! Bernoulli numbers and polynomials with exact rationals.

use toric_forms::arith::{bernoulli_number, bernoulli_polynomial, format_rational, frac};

fn main() {
    for k in 0..=12 {
        println!("B_{k} = {}", format_rational(&bernoulli_number(k)));
    }
    let x = frac(1, 5);
    for k in 1..=4 {
        println!("B_{k}(1/5) = {}", format_rational(&bernoulli_polynomial(k, &x)));
    }
}
