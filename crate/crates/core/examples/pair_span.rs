//! Pair products and the rank of their span against dim M_k and dim S_k.

use toric_forms::verify::{dims, pair_span_report, sturm_bound};

fn main() {
    for (l, k) in [(5, 2), (5, 3), (7, 3), (5, 4), (7, 4)] {
        let n = sturm_bound(l, k) + 10;
        let r = pair_span_report(l, k, n).unwrap();
        let (m, s) = dims(l, k).unwrap();
        println!(
            "l={l} k={k}: {} pairs, rank {} to q^{n}, dim M = {m}, dim S = {s}",
            r.labels.len(),
            r.rank
        );
    }
}
