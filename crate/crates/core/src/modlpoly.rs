//! Functions on ℤ and ℤ² that are polynomial on every residue class mod `l`.
//!
//! A [`ModLPoly1`] is a list of `l` ordinary polynomials, one per residue;
//! evaluation at `m` picks the branch of `m mod l`. [`ModLPoly2`] does the
//! same for pairs of residues. Parity is always decided symbolically by
//! comparing branch polynomials, never by sampling.

use num_traits::{One, Zero};

use crate::arith::{frac, modulo, rat, Rational};
use crate::error::{Error, Result};
use crate::poly::{Poly, Poly2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModLPoly1 {
    modulus: u64,
    branches: Vec<Poly>,
}

impl ModLPoly1 {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self {
            modulus,
            branches: vec![Poly::zero(); modulus as usize],
        }
    }

    pub fn from_branches(modulus: u64, branches: Vec<Poly>) -> Result<Self> {
        if modulus == 0 || branches.len() != modulus as usize {
            return Err(Error::DimensionMismatch {
                expected: modulus as usize,
                found: branches.len(),
            });
        }
        Ok(Self { modulus, branches })
    }

    /// `c * m^e` on every residue class.
    pub fn monomial(modulus: u64, e: usize, c: Rational) -> Self {
        Self {
            modulus,
            branches: vec![Poly::monomial(e, c); modulus as usize],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn branch(&self, residue: u64) -> &Poly {
        &self.branches[residue as usize]
    }

    pub fn branches(&self) -> &[Poly] {
        &self.branches
    }

    pub fn degree(&self) -> Option<usize> {
        self.branches.iter().filter_map(Poly::degree).max()
    }

    pub fn eval(&self, m: i64) -> Rational {
        let r = modulo(m, self.modulus as i64) as usize;
        self.branches[r].eval(&rat(m))
    }

    pub fn add(&self, other: &ModLPoly1) -> ModLPoly1 {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        ModLPoly1 {
            modulus: self.modulus,
            branches: self
                .branches
                .iter()
                .zip(&other.branches)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> ModLPoly1 {
        ModLPoly1 {
            modulus: self.modulus,
            branches: self.branches.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.branches.iter().all(Poly::is_zero)
    }

    /// `(h(m) - h(-m)) / 2`
    pub fn odd_part(&self) -> ModLPoly1 {
        let l = self.modulus as i64;
        ModLPoly1 {
            modulus: self.modulus,
            branches: (0..l)
                .map(|r| {
                    let mirrored = self.branches[modulo(-r, l) as usize].reflect();
                    self.branches[r as usize].add(&mirrored.neg()).scale(&frac(1, 2))
                })
                .collect(),
        }
    }

    /// `h(-m) = -h(m)`, checked branch by branch.
    pub fn is_odd(&self) -> bool {
        self.parity_holds(true)
    }

    pub fn is_even(&self) -> bool {
        self.parity_holds(false)
    }

    fn parity_holds(&self, odd: bool) -> bool {
        let l = self.modulus as i64;
        (0..l).all(|r| {
            let mirrored = self.branches[modulo(-r, l) as usize].reflect();
            let own = &self.branches[r as usize];
            if odd {
                mirrored == own.neg()
            } else {
                mirrored == *own
            }
        })
    }
}

/// `r_{a,k}(m) = m^k δ(m ≡ a) - (-1)^k m^k δ(m ≡ -a)`.
pub fn r_basis(a: u64, k: usize, l: u64) -> ModLPoly1 {
    assert!(a < l, "residue must be reduced");
    let mut h = ModLPoly1::zero(l);
    let neg = modulo(-(a as i64), l as i64) as usize;
    let sign = if k % 2 == 0 { -Rational::one() } else { Rational::one() };
    h.branches[a as usize] = h.branches[a as usize].add(&Poly::monomial(k, Rational::one()));
    h.branches[neg] = h.branches[neg].add(&Poly::monomial(k, sign));
    h
}

/// One term `coeff * r_{a, weight-1}` of an odd (mod l)-polynomial, i.e. the
/// divisor-sum part of `coeff * s̃^{(weight)}_{a/l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeTerm {
    pub a: u64,
    pub weight: usize,
    pub coeff: Rational,
}

/// Writes an odd `h` as `sum coeff * r_{a, weight-1}`.
///
/// Residues are reported by the smaller representative of `{a, -a}`; terms
/// come out sorted by `(a, weight)`.
pub fn to_tilde_combination(h: &ModLPoly1) -> Result<Vec<TildeTerm>> {
    if !h.is_odd() {
        return Err(Error::Parity("odd"));
    }
    let l = h.modulus;
    let mut out = Vec::new();
    let mut rebuilt = ModLPoly1::zero(l);
    for a in 0..l {
        let neg = modulo(-(a as i64), l as i64) as u64;
        if neg < a {
            continue;
        }
        let self_paired = neg == a;
        for (e, c) in h.branches[a as usize].coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // On a self-paired class r_{a,e} = 2 m^e for odd e and vanishes for even e.
            let coeff = if self_paired { c / rat(2) } else { c.clone() };
            rebuilt = rebuilt.add(&r_basis(a, e, l).scale(&coeff));
            out.push(TildeTerm {
                a,
                weight: e + 1,
                coeff,
            });
        }
    }
    if rebuilt != *h {
        return Err(Error::Internal(
            "odd (mod l)-polynomial did not decompose into r_{a,k}".into(),
        ));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModLPoly2 {
    modulus: u64,
    // indexed by r1 * l + r2
    branches: Vec<Poly2>,
}

impl ModLPoly2 {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self {
            modulus,
            branches: vec![Poly2::zero(); (modulus * modulus) as usize],
        }
    }

    pub fn from_fn(modulus: u64, mut branch: impl FnMut(u64, u64) -> Poly2) -> Self {
        let mut g = Self::zero(modulus);
        for r1 in 0..modulus {
            for r2 in 0..modulus {
                g.branches[(r1 * modulus + r2) as usize] = branch(r1, r2);
            }
        }
        g
    }

    /// The same polynomial on every pair of classes.
    pub fn uniform(modulus: u64, p: Poly2) -> Self {
        Self::from_fn(modulus, |_, _| p.clone())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn branch(&self, r1: u64, r2: u64) -> &Poly2 {
        &self.branches[(r1 * self.modulus + r2) as usize]
    }

    fn branch_of(&self, n1: i64, n2: i64) -> &Poly2 {
        let l = self.modulus as i64;
        self.branch(modulo(n1, l) as u64, modulo(n2, l) as u64)
    }

    pub fn eval(&self, n1: i64, n2: i64) -> Rational {
        self.branch_of(n1, n2).eval(&rat(n1), &rat(n2))
    }

    pub fn add(&self, other: &ModLPoly2) -> ModLPoly2 {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        ModLPoly2 {
            modulus: self.modulus,
            branches: self
                .branches
                .iter()
                .zip(&other.branches)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// `G(-n1, -n2) = G(n1, n2)`, checked branch by branch.
    pub fn is_even(&self) -> bool {
        let l = self.modulus as i64;
        (0..l).all(|r1| {
            (0..l).all(|r2| {
                let mirrored = self
                    .branch(modulo(-r1, l) as u64, modulo(-r2, l) as u64)
                    .reflect();
                mirrored == *self.branch(r1 as u64, r2 as u64)
            })
        })
    }

    /// `(G(n) + G(-n)) / 2`
    pub fn even_part(&self) -> ModLPoly2 {
        let l = self.modulus as i64;
        Self::from_fn(self.modulus, |r1, r2| {
            let mirrored = self
                .branch(modulo(-(r1 as i64), l) as u64, modulo(-(r2 as i64), l) as u64)
                .reflect();
            self.branch(r1, r2).add(&mirrored).scale(&frac(1, 2))
        })
    }
}

/// Closed form of
/// `f(d) = sum_{0<n<Nd} G(n,d) + G(0,d)/2 + G(Nd,d)/2`
/// as a (mod l)-polynomial in `d`, valid for every positive `d`.
///
/// Each power sum over an arithmetic progression is evaluated with the
/// Bernoulli-polynomial telescoping identity, so the result is exact and
/// symbolic. For even `G` the result is odd.
pub fn cone_sum(g: &ModLPoly2, n: u64) -> Result<ModLPoly1> {
    if !g.is_even() {
        return Err(Error::Parity("even"));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("cone_sum needs N >= 1".into()));
    }
    let l = g.modulus;
    let li = l as i64;
    let nr = rat(n as i64);
    let mut branches = Vec::with_capacity(l as usize);
    for rho in 0..l {
        let top_residue = (n * rho) % l;
        let mut total = Poly::zero();
        for r1 in 0..l {
            let branch = g.branch(r1, rho);
            let Some(deg) = branch.x_degree() else {
                continue;
            };
            let first = if r1 == 0 { l } else { r1 };
            let shift = modulo(r1 as i64 - top_residue as i64, li);
            for e in 0..=deg {
                let c = branch.x_coeff(e);
                if c.is_zero() {
                    continue;
                }
                let sum = progression_power_sum(e, l, first, shift, &nr);
                total = total.add(&c.mul(&sum));
            }
        }
        let half = frac(1, 2);
        let at_zero = g.branch(0, rho).on_line(&Rational::zero());
        let at_top = g.branch(top_residue, rho).on_line(&nr);
        total = total.add(&at_zero.scale(&half)).add(&at_top.scale(&half));
        branches.push(total);
    }
    ModLPoly1::from_branches(l, branches)
}

/// `sum_{0 < n < X, n ≡ first (mod l)} n^e` at `X = N d`, as a polynomial in
/// `d`, for `X ≡ first - shift (mod l)`.
fn progression_power_sum(e: usize, l: u64, first: u64, shift: i64, n: &Rational) -> Poly {
    let lr = rat(l as i64);
    let scale = num_traits::pow(lr.clone(), e) / rat(e as i64 + 1);
    let b = Poly::bernoulli(e + 1);
    // (X + shift) / l with X = N d
    let arg = Poly::linear(n / &lr, rat(shift) / &lr);
    let start = b.eval(&(rat(first as i64) / &lr));
    b.compose(&arg)
        .add(&Poly::constant(-start))
        .scale(&scale)
}

/// Direct evaluation of the cone sum at one `d`, for cross-checking.
pub fn cone_sum_brute(g: &ModLPoly2, n: u64, d: i64) -> Rational {
    let top = n as i64 * d;
    let mut s: Rational = (1..top).map(|k| g.eval(k, d)).sum();
    s += (g.eval(0, d) + g.eval(top, d)) / rat(2);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::divisor_sum_series;

    #[test]
    fn eval_examples() {
        let h = ModLPoly1::from_branches(
            2,
            vec![
                Poly::new(vec![rat(0), rat(1), rat(1)]),
                Poly::monomial(3, rat(1)),
            ],
        )
        .unwrap();
        assert_eq!(h.eval(3), rat(27));
        assert_eq!(h.eval(-2), rat(2));
        assert_eq!(r_basis(1, 0, 5).eval(-1), rat(-1));
    }

    #[test]
    fn r_basis_examples() {
        let r = r_basis(1, 0, 5);
        let values: Vec<_> = (0..5).map(|m| r.eval(m)).collect();
        assert_eq!(values, vec![rat(0), rat(1), rat(0), rat(0), rat(-1)]);
        // On a self-paired class the two terms cancel for even k.
        assert!(r_basis(0, 2, 5).is_zero());
        assert_eq!(r_basis(0, 3, 5).eval(5), rat(250));
        assert_eq!(r_basis(2, 1, 5).eval(7), rat(7));
    }

    #[test]
    fn parity_examples() {
        for l in 1..7 {
            for a in 0..l {
                for k in 0..5 {
                    assert!(r_basis(a, k, l).is_odd());
                }
            }
        }
        assert!(!ModLPoly1::monomial(1, 2, rat(1)).is_odd());
        assert!(ModLPoly2::uniform(1, Poly2::monomial(1, 1, rat(1))).is_even());
        assert!(!ModLPoly2::uniform(1, Poly2::monomial(1, 0, rat(1))).is_even());
    }

    #[test]
    fn cone_sum_examples() {
        let one = ModLPoly2::uniform(1, Poly2::monomial(0, 0, rat(1)));
        let f = cone_sum(&one, 1).unwrap();
        assert_eq!(f.branch(0).coeffs(), &[rat(0), rat(1)]);

        let sq = ModLPoly2::uniform(1, Poly2::monomial(2, 0, rat(1)));
        let f = cone_sum(&sq, 1).unwrap();
        assert_eq!(f.branch(0).coeffs(), &[rat(0), frac(1, 6), rat(0), frac(1, 3)]);

        let prod = ModLPoly2::uniform(1, Poly2::monomial(1, 1, rat(1)));
        let f = cone_sum(&prod, 2).unwrap();
        assert_eq!(f.branch(0).coeffs(), &[rat(0), rat(0), rat(0), rat(2)]);

        for (g, n) in [(&one, 1), (&sq, 1), (&prod, 2)] {
            let f = cone_sum(g, n).unwrap();
            for d in 1..=40 {
                assert_eq!(f.eval(d), cone_sum_brute(g, n, d));
            }
        }
    }

    #[test]
    fn cone_sum_rejects_non_even() {
        let odd = ModLPoly2::uniform(1, Poly2::monomial(1, 0, rat(1)));
        assert_eq!(cone_sum(&odd, 1), Err(Error::Parity("even")));
    }

    #[test]
    fn tilde_combination_examples() {
        let terms = to_tilde_combination(&r_basis(1, 2, 5)).unwrap();
        assert_eq!(
            terms,
            vec![TildeTerm {
                a: 1,
                weight: 3,
                coeff: rat(1)
            }]
        );
        assert!(to_tilde_combination(&ModLPoly1::zero(5)).unwrap().is_empty());
        let h = r_basis(1, 0, 5).add(&r_basis(2, 1, 5).scale(&rat(2)));
        let terms = to_tilde_combination(&h).unwrap();
        assert_eq!(
            terms,
            vec![
                TildeTerm { a: 1, weight: 1, coeff: rat(1) },
                TildeTerm { a: 2, weight: 2, coeff: rat(2) },
            ]
        );
        assert_eq!(
            to_tilde_combination(&ModLPoly1::monomial(3, 2, rat(1))),
            Err(Error::Parity("odd"))
        );
    }

    #[test]
    fn self_paired_classes_decompose() {
        // l = 6: classes 0 and 3 are their own negatives.
        let h = r_basis(3, 3, 6).add(&r_basis(0, 1, 6)).add(&r_basis(2, 2, 6));
        let terms = to_tilde_combination(&h).unwrap();
        let mut rebuilt = ModLPoly1::zero(6);
        for t in &terms {
            rebuilt = rebuilt.add(&r_basis(t.a, t.weight - 1, 6).scale(&t.coeff));
        }
        assert_eq!(rebuilt, h);
        let _ = divisor_sum_series(&h, 5);
    }
}
