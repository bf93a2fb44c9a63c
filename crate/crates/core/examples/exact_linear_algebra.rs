//! Rank, reduction and solving over the rationals.

use toric_forms::arith::{format_rational, rat};
use toric_forms::linalg::{rank, EchelonBasis, SparseMatrix, SparseVec};

fn main() {
    let m = SparseMatrix::from_dense(&[
        vec![rat(1), rat(2), rat(3)],
        vec![rat(2), rat(4), rat(6)],
        vec![rat(0), rat(1), rat(1)],
    ]);
    println!("rank = {}", rank(&m));

    let mut basis = EchelonBasis::tracking(3);
    for i in 0..m.rows() {
        basis.insert(m.row(i)).unwrap();
    }
    let target = SparseVec::from_dense(&[rat(1), rat(3), rat(4)]);
    match basis.solve(&target).unwrap() {
        Some(combo) => {
            for (i, c) in combo.iter() {
                println!("row {i} * {}", format_rational(c));
            }
        }
        None => println!("not in the row space"),
    }
    let residual = basis.residual(&SparseVec::unit(2)).unwrap();
    println!("e_2 reduces to {:?}", residual.to_dense(3).iter().map(format_rational).collect::<Vec<_>>());
}
