//! q-expansions checked against classical values computed by other means.

use toric_forms::arith::{frac, rat};
use toric_forms::eisenstein::{eis_k, tilde_s, hecke_tp_on_form};
use toric_forms::qseries::QSeries;
use toric_forms::verify::eta_product;

fn sigma(k: u32, n: u64) -> i64 {
    (1..=n).filter(|d| n % d == 0).map(|d| (d as i64).pow(k)).sum()
}

#[test]
fn e4_and_e6_against_divisor_sums() {
    let e4 = eis_k(4, 30).unwrap();
    let e6 = eis_k(6, 30).unwrap();
    assert_eq!(e4.coeff(0), &frac(1, 240));
    assert_eq!(e6.coeff(0), &frac(-1, 504));
    for n in 1..=30 {
        assert_eq!(e4.coeff(n as usize), &rat(sigma(3, n)));
        assert_eq!(e6.coeff(n as usize), &rat(sigma(5, n)));
    }
}

#[test]
fn discriminant_from_eisenstein_matches_eta() {
    // 1728 Δ = E4^3 - E6^2 in the normalisation 240 E4, -504 E6.
    let n = 20;
    let e4 = eis_k(4, n).unwrap().scale(&rat(240));
    let e6 = eis_k(6, n).unwrap().scale(&rat(-504));
    let delta = e4.multiply(&e4).multiply(&e4).sub(&e6.multiply(&e6)).scale(&frac(1, 1728));
    let eta = eta_product(&[(1, 24)], n).unwrap();
    assert_eq!(delta.coeffs(), eta.coeffs());
    // Ramanujan τ(2..5).
    assert_eq!(eta.coeffs()[2..6], [rat(-24), rat(252), rat(-1472), rat(4830)]);
}

#[test]
fn level_two_weight_two_generator() {
    // 2 (E2(τ) - 2 E2(2τ)) with E2 = -1/24 + sum σ1(n) q^n.
    let n = 25;
    let s = tilde_s(2, 1, 2, n).unwrap();
    assert_eq!(s.coeff(0), &frac(1, 12));
    for m in 1..=n as u64 {
        let odd: i64 = (1..=m).filter(|d| m % d == 0 && d % 2 == 1).map(|d| d as i64).sum();
        assert_eq!(s.coeff(m as usize), &rat(2 * odd));
    }
}

#[test]
fn weight_three_level_seven_newform_is_a_hecke_eigenform() {
    // The form has a quadratic character, so ⟨2⟩f = χ(2) f = f (2 is a square mod 7).
    let f = eta_product(&[(1, 3), (7, 3)], 60).unwrap();
    let t2 = hecke_tp_on_form(&f, &f, 3, 2, 30).unwrap();
    assert_eq!(t2.coeffs(), f.truncate(30).scale(f.coeff(2)).coeffs());
    assert_eq!(f.coeff(2), &rat(-3));
}

#[test]
fn series_json_round_trip() {
    let s = tilde_s(7, 3, 3, 12).unwrap();
    let text = serde_json::to_string(&s.to_json()).unwrap();
    let back = QSeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back, s);
}
