//! Cone sums of even two-variable (mod l)-polynomials and the decomposition of
//! odd ones into generator divisor sums.

use toric_forms::arith::{format_rational, rat};
use toric_forms::modlpoly::{cone_sum, cone_sum_brute, to_tilde_combination, ModLPoly2};
use toric_forms::poly::Poly2;

fn main() {
    // G(n1, n2) = n1^2 + n2^2 on every class mod 3.
    let g = ModLPoly2::uniform(3, Poly2::monomial(2, 0, rat(1)).add(&Poly2::monomial(0, 2, rat(1))));
    let h = cone_sum(&g, 2).unwrap();
    println!("odd: {}", h.is_odd());
    for (r, b) in h.branches().iter().enumerate() {
        let cs: Vec<String> = b.coeffs().iter().map(format_rational).collect();
        println!("  d ≡ {r}: [{}]", cs.join(", "));
    }
    for d in 1..=4 {
        println!("  d={d}: closed {} brute {}", format_rational(&h.eval(d)), format_rational(&cone_sum_brute(&g, 2, d)));
    }
    for t in to_tilde_combination(&h).unwrap() {
        println!("  {} * s~({})_{}/3", format_rational(&t.coeff), t.weight, t.a);
    }
}
