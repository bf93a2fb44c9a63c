//! Exact rational arithmetic helpers: binomials, Bernoulli numbers and
//! Bernoulli polynomials.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact fraction, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_rat(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// Bernoulli number `B_k` with `B_1 = -1/2`.
///
/// Values are memoized; concurrent callers may both extend the table, which
/// is harmless because the recurrence is deterministic.
pub fn bernoulli_number(k: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().expect("bernoulli table poisoned").get(k) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().expect("bernoulli table poisoned");
    while table.len() <= k {
        let m = table.len();
        let value = if m == 0 {
            Rational::one()
        } else {
            // sum_{j<=m} C(m+1, j) B_j = 0
            let mut s = Rational::zero();
            for (j, b) in table.iter().enumerate() {
                s += binomial_rat(m as u64 + 1, j as u64) * b;
            }
            -s / rat(m as i64 + 1)
        };
        table.push(value);
    }
    table[k].clone()
}

/// Coefficients of `B_k(x)` in the monomial basis, lowest degree first.
pub fn bernoulli_poly_coeffs(k: usize) -> Vec<Rational> {
    (0..=k)
        .map(|j| binomial_rat(k as u64, j as u64) * bernoulli_number(k - j))
        .collect()
}

pub fn bernoulli_polynomial(k: usize, x: &Rational) -> Rational {
    let coeffs = bernoulli_poly_coeffs(k);
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Fractional part `{x}` in `[0, 1)`.
pub fn fractional_part(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn pow_i64(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn rat_pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Residue in `0..m`.
pub fn modulo(a: i64, m: i64) -> i64 {
    a.mod_floor(&m)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    a.gcd(&b).gcd(&c)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let e = modulo(a, m).extended_gcd(&m);
    (e.gcd == 1).then(|| modulo(e.x, m))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
