//! Quotient dimensions of the symbol spaces against a dense elimination that
//! writes the relations out directly.

use num_rational::BigRational;
use num_traits::{One, Zero};
use toric_forms::manin::SymbolSpace;

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = BigRational::one() / rows[rank][c].clone();
        let pivot: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Independent count: pairs by gcd test, relations written from the
/// explicit formulas x^r y^s(u,v) + (-1)^r x^s y^r(v,-u) and the three-term
/// relation with y^r (x-y)^s and (y-x)^r x^s expanded by hand.
fn brute_quotient_dim(l: i64, k: usize) -> usize {
    let g = |a: i64, b: i64| num_integer::Integer::gcd(&a, &b);
    let pairs: Vec<(i64, i64)> = (0..l)
        .flat_map(|u| (0..l).map(move |v| (u, v)))
        .filter(|&(u, v)| g(g(u, v), l) == 1)
        .collect();
    let n = k - 2;
    let idx = |i: usize, u: i64, v: i64| {
        let key = (u.rem_euclid(l), v.rem_euclid(l));
        pairs.iter().position(|&p| p == key).unwrap() * (n + 1) + i
    };
    let width = pairs.len() * (n + 1);
    let mut rows = Vec::new();
    let sign = |e: usize| if e % 2 == 0 { 1 } else { -1 };
    for &(u, v) in &pairs {
        for r in 0..=n {
            let s = n - r;
            let mut row = vec![0i64; width];
            row[idx(r, u, v)] += 1;
            row[idx(s, v, -u)] += sign(r);
            rows.push(row);

            let mut row = vec![0i64; width];
            row[idx(r, u, v)] += 1;
            // (-1)^r y^r (x - y)^s at (v, -u-v)
            for j in 0..=s {
                let c = binom(s, j) * sign(s - j);
                row[idx(j, v, -u - v)] += sign(r) * c;
            }
            // (-1)^s (y - x)^r x^s at (-u-v, u)
            for j in 0..=r {
                let c = binom(r, j) * sign(j);
                row[idx(j + s, -u - v, u)] += sign(s) * c;
            }
            rows.push(row);
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    width - dense_rank(rows)
}

#[test]
fn quotient_dims_match_dense_oracle() {
    for (l, k) in [(5u64, 2u32), (5, 3), (5, 4), (7, 3), (6, 3), (8, 2)] {
        let space = SymbolSpace::build(l, k).unwrap();
        assert_eq!(space.quotient_dim(), brute_quotient_dim(l as i64, k as usize), "({l},{k})");
    }
}

#[test]
fn frozen_fixtures() {
    assert_eq!(SymbolSpace::build(5, 2).unwrap().quotient_dim(), 3);
    assert_eq!(SymbolSpace::build(7, 3).unwrap().quotient_dim(), 8);
}
