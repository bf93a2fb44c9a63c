//! The toric Eisenstein generators and their products.
//!
//! `s̃^{(k)}_{a/l}` has q-expansion
//! `C + sum_{n>0} q^n sum_{d|n} d^{k-1} (δ(d ≡ a) + (-1)^k δ(d ≡ -a))`
//! with the constant fixed by modularity on Γ1(l):
//! `C = -l^{k-1} (B_k({a/l}) + (-1)^k B_k({-a/l})) / (2k)`.
//! At weight one this is `1/2 - a/l` for `0 < a < l` and `0` for `a ≡ 0`.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    bernoulli_number, bernoulli_polynomial, frac, fractional_part, gcd, mod_inverse, modulo,
    pow_i64, rat, Rational,
};
use crate::error::{Error, Result};
use crate::qseries::QSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EisLabel {
    pub level: u64,
    pub a: u64,
    pub weight: u32,
}

impl EisLabel {
    /// Reduces `a` modulo the level (so `a = l` becomes `0`).
    pub fn new(level: u64, a: i64, weight: u32) -> Self {
        assert!(level >= 1, "level must be positive");
        Self {
            level,
            a: modulo(a, level as i64) as u64,
            weight,
        }
    }

    /// The E_2-type generator `s̃^{(2)}_{0/l}`.
    pub fn is_quasimodular(&self) -> bool {
        self.a == 0 && self.weight == 2
    }

    pub fn series(&self, order: usize) -> Result<QSeries> {
        tilde_s(self.level, self.a as i64, self.weight, order)
    }
}

impl fmt::Display for EisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s~({})_{}/{}", self.weight, self.a, self.level)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairLabel {
    Single(EisLabel),
    Product(EisLabel, EisLabel),
}

impl PairLabel {
    pub fn weight(&self) -> u32 {
        match self {
            PairLabel::Single(e) => e.weight,
            PairLabel::Product(x, y) => x.weight + y.weight,
        }
    }

    pub fn is_quasimodular(&self) -> bool {
        match self {
            PairLabel::Single(e) => e.is_quasimodular(),
            PairLabel::Product(x, y) => x.is_quasimodular() || y.is_quasimodular(),
        }
    }

    pub fn diamond(&self, p: i64) -> Result<PairLabel> {
        Ok(match self {
            PairLabel::Single(e) => PairLabel::Single(diamond_relabel(p, e)?),
            PairLabel::Product(x, y) => {
                PairLabel::Product(diamond_relabel(p, x)?, diamond_relabel(p, y)?)
            }
        })
    }

    pub fn series(&self, order: usize) -> Result<QSeries> {
        match self {
            PairLabel::Single(e) => e.series(order),
            PairLabel::Product(x, y) => Ok(x.series(order)?.multiply(&y.series(order)?)),
        }
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairLabel::Single(e) => write!(f, "{e}"),
            PairLabel::Product(x, y) => write!(f, "{x}*{y}"),
        }
    }
}

/// Constant term of `s̃^{(k)}_{a/l}`.
pub fn tilde_constant(l: u64, a: i64, k: u32) -> Rational {
    let x = frac(a, l as i64);
    let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
    let b = bernoulli_polynomial(k as usize, &fractional_part(&x))
        + sign * bernoulli_polynomial(k as usize, &fractional_part(&-x));
    let scale = Rational::from_integer(pow_i64(l as i64, k - 1));
    -(scale * b) / rat(2 * k as i64)
}

/// `s̃^{(k)}_{a/l}` to order `order`.
pub fn tilde_s(l: u64, a: i64, k: u32, order: usize) -> Result<QSeries> {
    if k == 0 {
        return Err(Error::InvalidParameter("weight must be at least 1".into()));
    }
    if l == 0 {
        return Err(Error::InvalidParameter("level must be positive".into()));
    }
    let li = l as i64;
    let a = modulo(a, li);
    let neg = modulo(-a, li);
    let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
    let mut s = QSeries::constant(tilde_constant(l, a, k), order).with_tags(k as i64, l);
    for d in 1..=order as i64 {
        let r = modulo(d, li);
        let mut w = Rational::zero();
        if r == a {
            w += Rational::one();
        }
        if r == neg {
            w += &sign;
        }
        if w.is_zero() {
            continue;
        }
        let term = Rational::from_integer(pow_i64(d, k - 1)) * w;
        for m in (d..=order as i64).step_by(d as usize) {
            let c = s.coeff(m as usize) + &term;
            s.set_coeff(m as usize, c);
        }
    }
    Ok(s)
}

/// Level-one `E_k = -B_k/(2k) + sum σ_{k-1}(n) q^n`, even `k >= 2`.
pub fn eis_k(k: u32, order: usize) -> Result<QSeries> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "E_k needs an even weight >= 2, got {k}"
        )));
    }
    let mut s = QSeries::constant(-bernoulli_number(k as usize) / rat(2 * k as i64), order)
        .with_tags(k as i64, 1);
    for d in 1..=order {
        let term = Rational::from_integer(pow_i64(d as i64, k - 1));
        for m in (d..=order).step_by(d) {
            let c = s.coeff(m) + &term;
            s.set_coeff(m, c);
        }
    }
    Ok(s)
}

/// `a ↦ p^{-1} a (mod l)`, the action of an element of Γ0(l) with lower
/// right entry `p`.
pub fn diamond_relabel(p: i64, label: &EisLabel) -> Result<EisLabel> {
    let l = label.level as i64;
    if gcd(p, l) != 1 {
        return Err(Error::NotCoprime { a: p, l });
    }
    let inv = mod_inverse(p, l).expect("coprime");
    Ok(EisLabel::new(label.level, inv * label.a as i64, label.weight))
}

/// Memo of generator series for one level and truncation.
#[derive(Debug, Default)]
pub struct TildeCache {
    level: u64,
    order: usize,
    table: HashMap<(u64, u32), QSeries>,
}

impl TildeCache {
    pub fn new(level: u64, order: usize) -> Self {
        Self {
            level,
            order,
            table: HashMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&mut self, a: i64, weight: u32) -> &QSeries {
        let a = modulo(a, self.level as i64) as u64;
        let (level, order) = (self.level, self.order);
        self.table.entry((a, weight)).or_insert_with(|| {
            tilde_s(level, a as i64, weight, order).expect("weight is positive")
        })
    }

    pub fn label(&mut self, label: &EisLabel) -> QSeries {
        self.get(label.a as i64, label.weight).clone()
    }

    pub fn pair(&mut self, label: &PairLabel) -> QSeries {
        match label {
            PairLabel::Single(e) => self.label(e),
            PairLabel::Product(x, y) => {
                let sx = self.label(x);
                sx.multiply(self.get(y.a as i64, y.weight))
            }
        }
    }
}

/// Every single `s̃^{(k)}_{a/l}` and every product `s̃^{(m)}_{a/l} s̃^{(n)}_{b/l}`
/// with `m + n = k`. Labels with an E_2-type factor are dropped unless
/// `include_quasimodular` is set. No symmetry deduplication is done.
pub fn pair_labels(l: u64, k: u32, include_quasimodular: bool) -> Result<Vec<PairLabel>> {
    if k < 2 {
        return Err(Error::InvalidParameter("pairs need weight >= 2".into()));
    }
    let mut labels = Vec::new();
    for a in 0..l {
        labels.push(PairLabel::Single(EisLabel::new(l, a as i64, k)));
    }
    for m in 1..k {
        let n = k - m;
        for a in 0..l {
            for b in 0..l {
                labels.push(PairLabel::Product(
                    EisLabel::new(l, a as i64, m),
                    EisLabel::new(l, b as i64, n),
                ));
            }
        }
    }
    labels.retain(|p| include_quasimodular || !p.is_quasimodular());
    Ok(labels)
}

pub fn pair_basis(
    l: u64,
    k: u32,
    order: usize,
    include_quasimodular: bool,
) -> Result<Vec<(PairLabel, QSeries)>> {
    let labels = pair_labels(l, k, include_quasimodular)?;
    let mut cache = TildeCache::new(l, order);
    Ok(labels
        .into_iter()
        .map(|label| {
            let s = cache.pair(&label);
            (label, s)
        })
        .collect())
}

/// `T_p` on q-expansions: `a_n ↦ a_{pn}(f) + p^{k-1} a_{n/p}(⟨p⟩f)`.
///
/// `f_diamond` must be the image of `f` under the diamond operator for `p`.
pub fn hecke_tp_on_form(
    f: &QSeries,
    f_diamond: &QSeries,
    k: u32,
    p: u64,
    order_out: usize,
) -> Result<QSeries> {
    let need = p as usize * order_out;
    let have = f.order().min(f_diamond.order());
    if have < need {
        return Err(Error::InsufficientTruncation { have, need });
    }
    let pk = Rational::from_integer(pow_i64(p as i64, k - 1));
    let mut out = QSeries::zero(order_out).with_tags(f.weight, f.level);
    for n in 0..=order_out {
        let mut c = f.coeff(p as usize * n).clone();
        if n % p as usize == 0 {
            c += &pk * f_diamond.coeff(n / p as usize);
        }
        out.set_coeff(n, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modlpoly::r_basis;
    use crate::qseries::divisor_sum_series;

    #[test]
    fn weight_one_constants() {
        let s = tilde_s(5, 1, 1, 6).unwrap();
        assert_eq!(s.coeff(0), &frac(3, 10));
        for l in [5u64, 7, 9] {
            for a in 1..l {
                assert_eq!(
                    tilde_constant(l, a as i64, 1),
                    frac(1, 2) - frac(a as i64, l as i64)
                );
            }
        }
        assert!(tilde_s(7, 0, 1, 10).unwrap().is_zero());
    }

    #[test]
    fn odd_weight_at_zero_vanishes() {
        for k in [3, 5] {
            assert!(tilde_s(5, 0, k, 20).unwrap().is_zero());
        }
    }

    #[test]
    fn level_one_weight_four() {
        // a = 0 at level one is twice E_4.
        let s = tilde_s(1, 0, 4, 4).unwrap();
        assert_eq!(s.coeff(0), &frac(1, 120));
        assert_eq!(s.coeff(2), &rat(18));
        // At level l only divisors divisible by l contribute.
        let s = tilde_s(5, 0, 4, 10).unwrap();
        assert_eq!(s.coeff(2), &rat(0));
        assert_eq!(s.coeff(5), &rat(250));
        assert_eq!(s.coeff(0), &frac(125, 120));
    }

    #[test]
    fn eis_k_examples() {
        let e4 = eis_k(4, 3).unwrap();
        assert_eq!(e4.coeff(0), &frac(1, 240));
        assert_eq!(e4.coeff(2), &rat(9));
        let e2 = eis_k(2, 3).unwrap();
        assert_eq!(e2.coeff(1), &rat(1));
        assert!(EisLabel::new(7, 7, 2).is_quasimodular());
        assert!(eis_k(3, 3).is_err());
    }

    #[test]
    fn diamond_examples() {
        let lab = EisLabel::new(5, 1, 3);
        assert_eq!(diamond_relabel(2, &lab).unwrap().a, 3);
        assert_eq!(diamond_relabel(6, &lab).unwrap(), lab);
        assert_eq!(diamond_relabel(2, &EisLabel::new(5, 0, 3)).unwrap().a, 0);
        assert!(matches!(
            diamond_relabel(5, &lab),
            Err(Error::NotCoprime { .. })
        ));
        for l in [5i64, 7, 9] {
            for a in 0..l {
                let lab = EisLabel::new(l as u64, a, 2);
                for p in 1..l {
                    for q in 1..l {
                        if gcd(p, l) == 1 && gcd(q, l) == 1 {
                            let twice =
                                diamond_relabel(q, &diamond_relabel(p, &lab).unwrap()).unwrap();
                            assert_eq!(twice, diamond_relabel(p * q, &lab).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pair_catalog_counts() {
        assert_eq!(pair_labels(5, 3, false).unwrap().len(), 45);
        assert_eq!(pair_labels(5, 3, true).unwrap().len(), 55);
        for l in [5, 7] {
            for k in 4..7 {
                assert!(
                    pair_labels(l, k, true).unwrap().len() > pair_labels(l, k, false).unwrap().len()
                );
            }
        }
        let basis = pair_basis(5, 3, 12, false).unwrap();
        for (label, s) in &basis {
            if let PairLabel::Product(x, y) = label {
                let prod = x.series(12).unwrap().multiply(&y.series(12).unwrap());
                assert_eq!(&prod, s);
            }
        }
    }

    #[test]
    fn symmetry_under_negation() {
        for l in [5u64, 7] {
            for k in 1..=6u32 {
                let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                for a in 0..l as i64 {
                    let s = tilde_s(l, a, k, 15).unwrap();
                    let t = tilde_s(l, l as i64 - a, k, 15).unwrap();
                    assert_eq!(t.coeffs(), s.scale(&sign).coeffs(), "l={l} k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn divisor_sum_bridge() {
        for l in [5u64, 7] {
            for k in 2..=5u32 {
                for a in 0..l {
                    let s = tilde_s(l, a as i64, k, 30).unwrap();
                    let mut d = divisor_sum_series(&r_basis(a, k as usize - 1, l), 30);
                    d.set_coeff(0, s.coeff(0).clone());
                    assert_eq!(d.coeffs(), s.coeffs());
                }
            }
        }
    }

    #[test]
    fn hecke_on_e4_is_eigen() {
        let e4 = eis_k(4, 40).unwrap();
        let t = hecke_tp_on_form(&e4, &e4, 4, 2, 20).unwrap();
        assert_eq!(t.coeffs(), e4.truncate(20).scale(&rat(9)).coeffs());
        let z = QSeries::zero(40);
        assert!(hecke_tp_on_form(&z, &z, 4, 2, 20).unwrap().is_zero());
        let t0 = hecke_tp_on_form(&e4, &e4, 4, 3, 5).unwrap();
        assert_eq!(t0.coeff(0), &(e4.coeff(0) * rat(28)));
        assert!(matches!(
            hecke_tp_on_form(&e4, &e4, 4, 2, 21),
            Err(Error::InsufficientTruncation { .. })
        ));
    }
}
