//! q-expansions of the generators and level-one Eisenstein series.

use toric_forms::eisenstein::{eis_k, tilde_s};

fn main() {
    let l: u64 = 5;
    for k in 1..=3 {
        for a in 0..l as i64 {
            println!("s~({k})_{a}/{l} = {}", tilde_s(l, a, k, 8).unwrap());
        }
    }
    let e4 = eis_k(4, 6).unwrap();
    println!("E_4 = {e4}");
    println!("D E_4 = {}", e4.q_derivative());
    println!("{}", serde_json::to_string(&tilde_s(5, 1, 1, 4).unwrap().to_json()).unwrap());
}
