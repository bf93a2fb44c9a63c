//! Checks that tie the pieces together: dimension and Sturm oracles, eta
//! products, pair spans, newform membership, and the symbol-side identities.

use num_traits::One;
use serde::Serialize;

use crate::arith::{divisors, frac, gcd, prime_divisors, rat, Rational};
use crate::eisenstein::{hecke_tp_on_form, pair_basis, PairLabel, TildeCache};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_h, enumerate_i};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::manin::{Sign, SymbolSpace, SymbolVector};
use crate::modlpoly::ModLPoly1;
use crate::poly::Poly;
use crate::qseries::QSeries;

fn euler_phi(n: u64) -> u64 {
    prime_divisors(n)
        .iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// `[SL2(ℤ) : Γ1(l)]`.
pub fn gamma1_index(l: u64) -> u64 {
    prime_divisors(l)
        .iter()
        .fold(l * l, |acc, p| acc / (p * p) * (p * p - 1))
}

/// `(dim M_k(Γ1(l)), dim S_k(Γ1(l)))` for `l >= 5`.
pub fn dims(l: u64, k: u32) -> Result<(u64, u64)> {
    if l < 5 || k < 2 {
        return Err(Error::Unsupported(format!(
            "dimension oracle needs l >= 5 and k >= 2, got ({l},{k})"
        )));
    }
    // No elliptic points and only regular cusps once l >= 5.
    let mu = gamma1_index(l) as i64 / 2;
    let cusps: i64 = divisors(l)
        .iter()
        .map(|&d| (euler_phi(d) * euler_phi(l / d)) as i64)
        .sum::<i64>()
        / 2;
    let genus = 1 + mu / 12 - cusps / 2;
    assert_eq!(12 * (genus - 1), mu - 6 * cusps, "genus formula is integral");
    let k = k as i64;
    let (m, s) = if k == 2 {
        (genus + cusps - 1, genus)
    } else {
        let m = (k - 1) * (genus - 1) + k * cusps / 2;
        (m, m - cusps)
    };
    Ok((m as u64, s as u64))
}

/// `ceil(k [SL2(ℤ):Γ1(l)] / 12)`.
pub fn sturm_bound(l: u64, k: u32) -> usize {
    let num = k as u64 * gamma1_index(l);
    num.div_ceil(12) as usize
}

/// `prod_d η(dτ)^{e_d}` to order `order`. The leading exponent
/// `sum d e_d / 24` must be a nonnegative integer and the weight integral.
pub fn eta_product(factors: &[(u64, i64)], order: usize) -> Result<QSeries> {
    let lead: i64 = factors.iter().map(|&(d, e)| d as i64 * e).sum();
    let weight: i64 = factors.iter().map(|&(_, e)| e).sum();
    if lead < 0 || lead % 24 != 0 {
        return Err(Error::InvalidParameter(format!(
            "leading exponent {lead}/24 is not a nonnegative integer"
        )));
    }
    if weight % 2 != 0 {
        return Err(Error::InvalidParameter(format!("weight {weight}/2 is not integral")));
    }
    let shift = (lead / 24) as usize;
    let mut s = QSeries::one(order);
    for &(d, e) in factors {
        if d == 0 {
            return Err(Error::InvalidParameter("eta scale must be positive".into()));
        }
        for n in 1..=order {
            let step = d as usize * n;
            if step > order {
                break;
            }
            // Multiply by (1 - q^step)^{±1}, |e| times.
            for _ in 0..e.unsigned_abs() {
                let mut c: Vec<Rational> = s.coeffs().to_vec();
                if e > 0 {
                    for i in (step..=order).rev() {
                        let t = &c[i] - &c[i - step];
                        c[i] = t;
                    }
                } else {
                    for i in step..=order {
                        let t = &c[i] + &c[i - step];
                        c[i] = t;
                    }
                }
                s = QSeries::from_coeffs(c);
            }
        }
    }
    let mut out = QSeries::zero(order);
    for i in shift..=order {
        out.set_coeff(i, s.coeff(i - shift).clone());
    }
    Ok(out.with_tags(weight / 2, 1))
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub level: u64,
    pub weight: u32,
    pub order: usize,
    pub labels: Vec<String>,
    pub rank: usize,
    pub dim_m: u64,
    pub dim_s: u64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

impl SpanReport {
    pub fn verdict(&self) -> bool {
        self.lower_ok && self.upper_ok
    }
}

fn need_order(l: u64, k: u32, order: usize, slack: usize) -> Result<()> {
    let need = sturm_bound(l, k) + slack;
    if order < need {
        return Err(Error::InsufficientTruncation { have: order, need });
    }
    Ok(())
}

/// Rank of the modular pairs against the dimension oracle.
pub fn pair_span_report(l: u64, k: u32, order: usize) -> Result<SpanReport> {
    need_order(l, k, order, 0)?;
    let basis = pair_basis(l, k, order, false)?;
    let mut ech = EchelonBasis::new(order + 1);
    for (_, s) in &basis {
        ech.insert(&s.to_sparse())?;
    }
    let (dim_m, dim_s) = dims(l, k)?;
    let rank = ech.rank();
    Ok(SpanReport {
        level: l,
        weight: k,
        order,
        labels: basis.iter().map(|(p, _)| p.to_string()).collect(),
        rank,
        dim_m,
        dim_s,
        lower_ok: rank as u64 >= dim_s,
        upper_ok: rank as u64 <= dim_m,
    })
}

/// Membership of `form` in the span of the modular pairs. On success the
/// combination is returned and has been checked against every coefficient.
pub fn check_newform_membership(
    l: u64,
    k: u32,
    form: &QSeries,
    order: usize,
) -> Result<Option<Vec<(PairLabel, Rational)>>> {
    need_order(l, k, order, 10)?;
    if form.order() < order {
        return Err(Error::InsufficientTruncation { have: form.order(), need: order });
    }
    let form = form.truncate(order);
    let basis = pair_basis(l, k, order, false)?;
    let mut ech = EchelonBasis::tracking(order + 1);
    for (_, s) in &basis {
        ech.insert(&s.to_sparse())?;
    }
    let Some(combo) = ech.solve(&form.to_sparse())? else {
        return Ok(None);
    };
    let mut rebuilt = QSeries::zero(order);
    let mut out = Vec::new();
    for (i, c) in combo.iter() {
        rebuilt.add_scaled(c, &basis[i].1);
        out.push((basis[i].0, c.clone()));
    }
    if rebuilt.coeffs() != form.coeffs() {
        return Err(Error::Internal("pair combination does not reproduce the form".into()));
    }
    Ok(Some(out))
}

/// Span of `s̃^{(k)}_{a/l}` and `D s̃^{(k-2)}_{a/l}` over all `a`.
pub fn eis_deriv_subspace(l: u64, k: u32, order: usize) -> Result<EchelonBasis> {
    if k < 3 {
        return Err(Error::InvalidParameter("the derivative subspace needs k >= 3".into()));
    }
    let mut cache = TildeCache::new(l, order);
    let mut ech = EchelonBasis::new(order + 1);
    for a in 0..l as i64 {
        ech.insert(&cache.get(a, k).to_sparse())?;
        ech.insert(&cache.get(a, k - 2).q_derivative().to_sparse())?;
    }
    Ok(ech)
}

/// `D s̃^{(k-2)}_{a/l}` lies in the quasimodular pair span for every `a`.
pub fn check_derivs_in_pairs(l: u64, k: u32, order: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::InvalidParameter("derivatives of weight k-2 >= 1 only".into()));
    }
    need_order(l, k, order, 10)?;
    let mut ech = EchelonBasis::new(order + 1);
    for (_, s) in pair_basis(l, k, order, true)? {
        ech.insert(&s.to_sparse())?;
    }
    let mut cache = TildeCache::new(l, order);
    for a in 0..l as i64 {
        if !ech.contains(&cache.get(a, k - 2).q_derivative().to_sparse())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three-term relation at `x^r y^s(a,b)` as raw generator coordinates.
pub fn relation_two(space: &SymbolSpace, r: usize, a: i64, b: i64) -> SparseVec {
    let w = space.generator(r, a, b);
    let t = space.act(&w, [0, -1, 1, -1]);
    let t2 = space.act(&w, [-1, 1, -1, 0]);
    &(&w + &t) + &t2
}

/// μ of the relation-(2) instance at `x^r y^s(a,b)` lies in the
/// Eisenstein-plus-derivative subspace.
pub fn check_mumap_relation(
    space: &SymbolSpace,
    subspace: &EchelonBasis,
    cache: &mut TildeCache,
    a: i64,
    b: i64,
    r: usize,
) -> Result<bool> {
    let rel = relation_two(space, r, a, b);
    let image = space.mu_series(&rel, cache);
    subspace.contains(&image.to_sparse())
}

/// Runs [`check_mumap_relation`] over every `(a,b) ∈ E_l` and every `r`.
pub fn check_mumap_all(l: u64, k: u32, order: usize) -> Result<bool> {
    if k <= 2 {
        return Err(Error::InvalidParameter("μ needs k > 2".into()));
    }
    let space = SymbolSpace::build(l, k)?;
    let sub = eis_deriv_subspace(l, k, order)?;
    let mut cache = TildeCache::new(l, order);
    for &(a, b) in space.pairs() {
        for r in 0..=(k as usize - 2) {
            if !check_mumap_relation(&space, &sub, &mut cache, a as i64, b as i64, r)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `μ(T_p w) - T_p μ(ε_{p^{-1}} w)` to order `order`, where `ε_{p^{-1}}` is
/// the relabelling `(u,v) ↦ (pu,pv)`.
pub fn hecke_defect(space: &SymbolSpace, p: u64, w: &SymbolVector, order: usize) -> Result<QSeries> {
    let l = space.level();
    let k = space.weight();
    if gcd(p as i64, l as i64) != 1 {
        return Err(Error::NotCoprime { a: p as i64, l: l as i64 });
    }
    let mut small = TildeCache::new(l, order);
    let lhs = space.mu_series(&space.hecke_tn(w, p as i64)?.raw, &mut small);
    let shifted = space.epsilon_diamond(w, p as i64)?;
    let mut big = TildeCache::new(l, p as usize * order);
    let mut rhs = QSeries::zero(order);
    for (label, c) in space.mu_labels(&shifted.raw) {
        let f = big.pair(&label);
        let fd = big.pair(&label.diamond(p as i64)?);
        rhs.add_scaled(&c, &hecke_tp_on_form(&f, &fd, k, p, order)?);
    }
    Ok(lhs.sub(&rhs))
}

pub fn check_hecke_equivariance(
    space: &SymbolSpace,
    p: u64,
    w: &SymbolVector,
    order: usize,
) -> Result<bool> {
    let (l, k) = (space.level(), space.weight());
    if k <= 2 {
        return Err(Error::InvalidParameter("μ needs k > 2".into()));
    }
    need_order(l, k, order, 10)?;
    let defect = hecke_defect(space, p, w, order)?;
    eis_deriv_subspace(l, k, order)?.contains(&defect.to_sparse())
}

/// `H(m) = R⁺_{(m,0)} + 2 sum_{0<i<m} R⁺_{(m,m-i)}` in quotient coordinates.
pub fn h_symbol(space: &SymbolSpace, m: i64) -> SparseVec {
    let mut acc = space.r_symbol(m, 0, Some(Sign::Plus)).reduced;
    for i in 1..m {
        acc.add_scaled(&rat(2), &space.r_symbol(m, m - i, Some(Sign::Plus)).reduced);
    }
    acc
}

/// Every quotient coordinate of `m ↦ H(m)` agrees with a (mod l)-polynomial
/// of degree at most `k` on `1..=m_max`, and that polynomial is odd.
pub fn check_oddprop_symbolic(l: u64, k: u32, m_max: usize) -> Result<bool> {
    let need = l as usize * (k as usize + 2);
    if m_max < need {
        return Err(Error::InsufficientTruncation { have: m_max, need });
    }
    let space = SymbolSpace::build(l, k)?;
    let samples: Vec<SparseVec> = (1..=m_max as i64).map(|m| h_symbol(&space, m)).collect();
    for col in space.relations().free_columns() {
        let mut branches = Vec::new();
        for res in 0..l as usize {
            let pts: Vec<(Rational, Rational)> = (1..=m_max)
                .filter(|m| m % l as usize == res)
                .map(|m| (rat(m as i64), samples[m - 1].get(col)))
                .collect();
            let fit = Poly::interpolate(&pts[..=k as usize]);
            if pts.iter().any(|(x, y)| fit.eval(x) != *y) {
                return Ok(false);
            }
            branches.push(fit);
        }
        if !ModLPoly1::from_branches(l, branches)?.is_odd() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn plus(space: &SymbolSpace, m: i64, n: i64) -> SparseVec {
    space.r_symbol(m, n, Some(Sign::Plus)).raw
}

/// Both sides of the R⁺ identity at `D`, as quotient representatives.
pub fn firstapprox_sides(space: &SymbolSpace, d: u64) -> (SymbolVector, SymbolVector) {
    let mut lhs = SparseVec::new();
    for q in enumerate_i(d) {
        lhs = &lhs + &plus(space, q.k1, q.k1 - q.k2);
        lhs = &lhs - &plus(space, q.k1, q.k1 + q.k2);
    }
    let di = d as i64;
    let mut rhs = SparseVec::new();
    for dv in divisors(d).into_iter().map(|x| x as i64) {
        rhs.add_scaled(&rat(-(2 * di / dv + 1)), &plus(space, dv, 0));
        for e in 1..dv {
            rhs.add_scaled(&rat(-2), &plus(space, dv, dv - e));
        }
    }
    for h in enumerate_h(d) {
        rhs.add_scaled(&rat(-3), &plus(space, h.c, h.d));
    }
    (space.vector(lhs), space.vector(rhs))
}

pub fn check_firstapprox(space: &SymbolSpace, d_max: u64) -> bool {
    (1..=d_max).all(|d| {
        let (a, b) = firstapprox_sides(space, d);
        a.same_class(&b)
    })
}

/// `T_n R⁺_{(0,1)} = sum_{H(n)} R⁺_{(c,d)}` in the quotient.
pub fn check_tn_r01(space: &SymbolSpace, n: u64) -> Result<bool> {
    let lhs = space.hecke_tn(&space.r_symbol(0, 1, Some(Sign::Plus)), n as i64)?;
    let mut rhs = SparseVec::new();
    for h in enumerate_h(n) {
        rhs = &rhs + &plus(space, h.c, h.d);
    }
    Ok(lhs.same_class(&space.vector(rhs)))
}

/// A reproducible vector with a few small nonzero generator coordinates.
pub fn random_symbol(space: &SymbolSpace, rng: &mut impl rand::Rng) -> SymbolVector {
    let mut raw = SparseVec::new();
    for _ in 0..3 {
        let idx = rng.gen_range(0..space.num_generators());
        let c = frac(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        raw.add_at(idx, &c);
    }
    if raw.is_zero() {
        raw.add_at(0, &Rational::one());
    }
    space.vector(raw)
}
