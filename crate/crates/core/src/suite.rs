//! The acceptance checks as data: each criterion runs end to end and reports
//! a verdict with a short detail line. Shared by `verify all` and the
//! acceptance test target.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::arith::{frac, rat};
use crate::eisenstein::tilde_s;
use crate::error::Result;
use crate::lattice::{
    enumerate_h, enumerate_i, sublattices_index_p, thread_down, thread_up, threads, HeckeQuad,
    InsideContext,
};
use crate::manin::{Sign, SymbolSpace};
use crate::modlpoly::{cone_sum, cone_sum_brute, to_tilde_combination, ModLPoly1, ModLPoly2};
use crate::poly::{Poly, Poly2};
use crate::qseries::{divisor_sum_series, QSeries};
use crate::verify::{
    check_derivs_in_pairs, check_firstapprox, check_hecke_equivariance, check_mumap_all,
    check_newform_membership, dims, eta_product, pair_span_report, random_symbol, sturm_bound,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Full,
    Fast,
}

impl Profile {
    fn pick<T>(self, full: T, fast: T) -> T {
        match self {
            Profile::Full => full,
            Profile::Fast => fast,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub check: String,
    pub params: String,
    pub verdict: bool,
    pub elapsed: f64,
    pub detail: String,
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub run: fn(Profile) -> Result<(bool, String)>,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "newforms are combinations of pairs", run: newforms },
        Criterion { id: 2, name: "hull segments biject with H(p)", run: segments },
        Criterion { id: 3, name: "R+ identity over I(D)", run: firstapprox },
        Criterion { id: 4, name: "mu sends relations into Eisenstein + derivatives", run: mumap },
        Criterion { id: 5, name: "mu is Hecke equivariant modulo the subspace", run: hecke },
        Criterion { id: 6, name: "derivatives lie in the quasimodular pair span", run: derivs },
        Criterion { id: 7, name: "cone sums of even inputs are odd", run: cone_sums },
        Criterion { id: 8, name: "odd (mod l)-polynomials round trip through s~", run: round_trip },
        Criterion { id: 9, name: "Hecke operators on symbols", run: symbol_hecke },
        Criterion { id: 10, name: "sigma cancellation away from rays", run: inside },
        Criterion { id: 11, name: "thread partition of I(D)", run: thread_partition },
        Criterion { id: 12, name: "dimension oracle and span ranks", run: oracle },
    ]
}

pub fn run_criterion(c: &Criterion, profile: Profile) -> Outcome {
    let start = Instant::now();
    let (verdict, detail) = match (c.run)(profile) {
        Ok(x) => x,
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome {
        check: format!("criterion {}", c.id),
        params: format!("{} ({:?})", c.name, profile),
        verdict,
        elapsed: start.elapsed().as_secs_f64(),
        detail,
    }
}

fn newforms(_: Profile) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (l, k, eta) in [(7u64, 3u32, [(1u64, 3i64), (7, 3)]), (5, 4, [(1, 4), (5, 4)])] {
        for order in [40, 50] {
            let f = eta_product(&eta, order)?;
            let combo = check_newform_membership(l, k, &f, order)?;
            ok &= combo.is_some();
            notes.push(format!(
                "({l},{k}) to q^{order}: {}",
                combo.map_or("not in span".into(), |c| format!("{} pairs", c.len()))
            ));
        }
    }
    Ok((ok, notes.join("; ")))
}

fn segments(_: Profile) -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13] {
        let lattices = sublattices_index_p(p)?;
        let mut got: BTreeMap<HeckeQuad, usize> = BTreeMap::new();
        let mut segs = 0;
        for s in &lattices {
            for q in s.boundary_segments() {
                segs += 1;
                *got.entry(q).or_default() += 1;
            }
        }
        let mut expect: BTreeMap<HeckeQuad, usize> = BTreeMap::new();
        for q in enumerate_h(p) {
            *expect.entry(q).or_default() += 1;
        }
        ok &= got == expect;
        if p == 2 {
            ok &= lattices.len() == 3 && segs == 4;
        }
        notes.push(format!("p={p}: {} lattices, {segs} segments", lattices.len()));
    }
    Ok((ok, notes.join("; ")))
}

fn firstapprox(profile: Profile) -> Result<(bool, String)> {
    let d_max = profile.pick(12, 8);
    let mut ok = true;
    for (l, k) in [(5, 3), (5, 4), (7, 3)] {
        ok &= check_firstapprox(&SymbolSpace::build(l, k)?, d_max);
    }
    Ok((ok, format!("D <= {d_max} at (5,3),(5,4),(7,3)")))
}

fn mumap(_: Profile) -> Result<(bool, String)> {
    let mut ok = true;
    for (l, k, n) in [(5, 3, 30), (5, 4, 30), (7, 3, 40)] {
        ok &= check_mumap_all(l, k, n)?;
        ok &= check_mumap_all(l, k, n + 10)?;
    }
    Ok((ok, "all relation (2) instances, stable at +10".into()))
}

fn hecke(profile: Profile) -> Result<(bool, String)> {
    let samples = profile.pick(10, 5);
    let mut rng = StdRng::seed_from_u64(2024);
    let mut ok = true;
    let mut checked = 0;
    for (l, k) in [(5u64, 3u32), (7, 3)] {
        let space = SymbolSpace::build(l, k)?;
        let order = sturm_bound(l, k) + 10;
        for p in [2u64, 3] {
            for _ in 0..samples {
                let w = random_symbol(&space, &mut rng);
                // The expansion is computed to p times this order internally.
                ok &= check_hecke_equivariance(&space, p, &w, order)?;
                checked += 1;
            }
        }
    }
    Ok((ok, format!("{checked} random symbols")))
}

fn derivs(_: Profile) -> Result<(bool, String)> {
    let ok = check_derivs_in_pairs(5, 3, 30)?
        && check_derivs_in_pairs(5, 4, 30)?
        && check_derivs_in_pairs(5, 3, 40)?
        && check_derivs_in_pairs(5, 4, 40)?;
    Ok((ok, "(5,3) and (5,4) to q^30 and q^40".into()))
}

fn random_rational(rng: &mut StdRng) -> crate::arith::Rational {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn random_poly(rng: &mut StdRng, degree: usize) -> Poly {
    Poly::new((0..=degree).map(|_| random_rational(rng)).collect())
}

fn cone_sums(profile: Profile) -> Result<(bool, String)> {
    let trials = profile.pick(100, 20);
    let mut rng = StdRng::seed_from_u64(77);
    let mut ok = true;
    for _ in 0..trials {
        let l = rng.gen_range(1..=6u64);
        let n = rng.gen_range(1..=3u64);
        let deg = rng.gen_range(0..=4usize);
        let raw = ModLPoly2::from_fn(l, |_, _| {
            let mut p = Poly2::zero();
            for i in 0..=deg {
                for j in 0..=(deg - i) {
                    if rng.gen_bool(0.4) {
                        p = p.add(&Poly2::monomial(i, j, random_rational(&mut rng)));
                    }
                }
            }
            p
        });
        let g = raw.even_part();
        let h = cone_sum(&g, n)?;
        ok &= h.is_odd();
        ok &= (1..=40).all(|d| h.eval(d) == cone_sum_brute(&g, n, d));
    }
    Ok((ok, format!("{trials} random even inputs, d = 1..40")))
}

fn round_trip(profile: Profile) -> Result<(bool, String)> {
    let trials = profile.pick(50, 15);
    let order = 50;
    let mut rng = StdRng::seed_from_u64(99);
    let mut ok = true;
    for _ in 0..trials {
        let l = rng.gen_range(1..=7u64);
        let deg = rng.gen_range(0..=4usize);
        let branches = (0..l).map(|_| random_poly(&mut rng, deg)).collect();
        let h = ModLPoly1::from_branches(l, branches)?.odd_part();
        let mut rebuilt = QSeries::zero(order);
        for t in to_tilde_combination(&h)? {
            let s = tilde_s(l, t.a as i64, t.weight as u32, order)?;
            let mut nonconstant = s.clone();
            nonconstant.set_coeff(0, rat(0));
            rebuilt.add_scaled(&t.coeff, &nonconstant);
        }
        ok &= rebuilt.coeffs() == divisor_sum_series(&h, order).coeffs();
    }
    Ok((ok, format!("{trials} random odd inputs to q^{order}")))
}

fn symbol_hecke(profile: Profile) -> Result<(bool, String)> {
    let samples = profile.pick(20, 5);
    let mut rng = StdRng::seed_from_u64(31);
    let mut ok = true;
    for (l, k) in [(5, 3), (7, 3)] {
        let space = SymbolSpace::build(l, k)?;
        for _ in 0..samples {
            let v = random_symbol(&space, &mut rng);
            for n in 1..=6 {
                for sign in [Sign::Plus, Sign::Minus] {
                    let a = space.hecke_tn(&space.symmetrize(&v, sign), n)?;
                    let b = space.symmetrize(&space.hecke_tn(&v, n)?, sign);
                    ok &= a.same_class(&b);
                }
            }
            let t6 = space.hecke_tn(&v, 6)?;
            let t23 = space.hecke_tn(&space.hecke_tn(&v, 3)?, 2)?;
            let t32 = space.hecke_tn(&space.hecke_tn(&v, 2)?, 3)?;
            ok &= t6.same_class(&t23) && t6.same_class(&t32);
        }
    }
    Ok((ok, format!("{samples} random symbols per level, n <= 6")))
}

fn inside(profile: Profile) -> Result<(bool, String)> {
    let d_max = profile.pick(10, 8);
    let l = 5u64;
    let space = SymbolSpace::build(l, 3)?;
    let mut ok = true;
    let mut checked = 0usize;
    for p in [2u64, 3] {
        for lattice in sublattices_index_p(p)? {
            let ctx = InsideContext::new(lattice);
            for d in 1..=d_max {
                for q in ctx.admissible_quads(d) {
                    for &(u, v) in space.pairs() {
                        for r in 0..=1 {
                            let t = ctx.total(l, r, 1 - r, u as i64, v as i64, &q)?;
                            ok &= t.is_zero();
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok((ok, format!("{checked} (S, quadruple, symbol) cases, D <= {d_max}")))
}

fn thread_partition(_: Profile) -> Result<(bool, String)> {
    let mut ok = true;
    for d in 1..=30 {
        let all = enumerate_i(d);
        for q in &all {
            if let Some(x) = thread_down(q) {
                ok &= thread_up(&x) == Some(*q);
            }
        }
        let ts = threads(d);
        let mut seen: Vec<_> = ts.iter().flatten().copied().collect();
        seen.sort();
        let mut expect = all.clone();
        expect.sort();
        ok &= seen == expect;
        for t in &ts {
            ok &= t.first().is_some_and(|q| q.m1 == q.m2);
            ok &= t.last().is_some_and(|q| q.k1 == q.k2);
            ok &= t.windows(2).all(|w| thread_down(&w[0]) == Some(w[1]));
        }
    }
    Ok((ok, "D <= 30".into()))
}

fn oracle(_: Profile) -> Result<(bool, String)> {
    let mut ok = dims(5, 3)? == (4, 0) && dims(7, 3)?.1 == 1 && dims(5, 4)?.1 == 1;
    let mut notes = Vec::new();
    for (l, k, n) in [(5u64, 3u32, 20usize), (7, 3, 30), (5, 4, 30)] {
        let at_sturm = pair_span_report(l, k, sturm_bound(l, k))?;
        let report = pair_span_report(l, k, n)?;
        let more = pair_span_report(l, k, n + 10)?;
        ok &= report.verdict() && more.verdict();
        ok &= at_sturm.rank == report.rank && report.rank == more.rank;
        notes.push(format!(
            "({l},{k}): {} <= rank {} <= {}",
            report.dim_s, report.rank, report.dim_m
        ));
    }
    Ok((ok, notes.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_one_to_twelve() {
        let ids: Vec<u32> = criteria().iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=12).collect::<Vec<_>>());
    }

    #[test]
    fn quick_criteria_pass_fast() {
        for c in criteria().iter().filter(|c| [2, 8, 11].contains(&c.id)) {
            let o = run_criterion(c, Profile::Fast);
            assert!(o.verdict, "{}: {}", c.id, o.detail);
        }
    }
}
