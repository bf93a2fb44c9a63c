//! Lattice combinatorics behind the Hecke compatibility of μ: Merel's set
//! H(n), the quadruples I(D) and their Euclidean threads, index-p
//! sublattices with their hull segments, duality, rays, and the cancellation
//! of the Σ1..Σ4 sums away from rays.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{gcd, is_prime, modulo, rat, Rational};
use crate::error::{Error, Result};

/// `(a, b, c, d)` with `a > b >= 0`, `d > c >= 0`, `ad - bc = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HeckeQuad {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl HeckeQuad {
    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }
}

impl fmt::Display for HeckeQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

/// Merel's set H(n) in lexicographic order.
pub fn enumerate_h(n: u64) -> Vec<HeckeQuad> {
    let n = n as i64;
    let mut out = Vec::new();
    // ad - bc >= a + d - 1, so a + d <= n + 1.
    for a in 1..=n {
        for b in 0..a {
            for c in 0..=(n - a) {
                for d in (c + 1)..=(n + 1 - a) {
                    if a * d - b * c == n {
                        out.push(HeckeQuad { a, b, c, d });
                    }
                }
            }
        }
    }
    out
}

/// `(m1, k1, m2, k2)` with `m1 k1 + m2 k2 = D`. Entries from [`enumerate_i`]
/// are positive; signed quadruples are used by the cancellation check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IQuad {
    pub m1: i64,
    pub k1: i64,
    pub m2: i64,
    pub k2: i64,
}

impl IQuad {
    pub fn new(m1: i64, k1: i64, m2: i64, k2: i64) -> Self {
        Self { m1, k1, m2, k2 }
    }

    pub fn value(&self) -> i64 {
        self.m1 * self.k1 + self.m2 * self.k2
    }

    pub fn neg(&self) -> IQuad {
        IQuad::new(-self.m1, -self.k1, -self.m2, -self.k2)
    }

    pub fn m(&self) -> (i64, i64) {
        (self.m1, self.m2)
    }

    pub fn k(&self) -> (i64, i64) {
        (self.k1, self.k2)
    }
}

impl fmt::Display for IQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m1, self.k1, self.m2, self.k2)
    }
}

/// I(D): positive solutions of `m1 k1 + m2 k2 = D`, lexicographic.
pub fn enumerate_i(d: u64) -> Vec<IQuad> {
    let d = d as i64;
    let mut out = Vec::new();
    for m1 in 1..d {
        for k1 in 1..=(d - 1) / m1 {
            let rest = d - m1 * k1;
            for m2 in 1..=rest {
                if rest % m2 == 0 {
                    out.push(IQuad::new(m1, k1, m2, rest / m2));
                }
            }
        }
    }
    out
}

/// Υ, undefined when `m1 = m2`.
pub fn thread_up(q: &IQuad) -> Option<IQuad> {
    let IQuad { m1, k1, m2, k2 } = *q;
    match m1.cmp(&m2) {
        Ordering::Greater => Some(IQuad::new(m2, k1 + k2, m1 - m2, k1)),
        Ordering::Less => Some(IQuad::new(m2 - m1, k2, m1, k1 + k2)),
        Ordering::Equal => None,
    }
}

/// Δ, undefined when `k1 = k2`.
pub fn thread_down(q: &IQuad) -> Option<IQuad> {
    let IQuad { m1, k1, m2, k2 } = *q;
    match k1.cmp(&k2) {
        Ordering::Greater => Some(IQuad::new(m1 + m2, k2, m1, k1 - k2)),
        Ordering::Less => Some(IQuad::new(m2, k2 - k1, m1 + m2, k1)),
        Ordering::Equal => None,
    }
}

/// I(D) split into Δ-orbits, each running from `m1 = m2` to `k1 = k2`.
pub fn threads(d: u64) -> Vec<Vec<IQuad>> {
    let mut out = Vec::new();
    for top in enumerate_i(d).into_iter().filter(|q| q.m1 == q.m2) {
        let mut thread = vec![top];
        let mut cur = top;
        while let Some(next) = thread_down(&cur) {
            thread.push(next);
            cur = next;
        }
        out.push(thread);
    }
    out
}

type Point = (i64, i64);

fn cross(a: Point, b: Point) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: Point, b: Point) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

fn primitive(v: Point) -> Point {
    let g = gcd(v.0, v.1);
    (v.0 / g, v.1 / g)
}

/// Half-plane index for angular sorting: `[0, π)` is 0, `[π, 2π)` is 1.
fn half(v: Point) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order starting from the positive x-axis.
fn angle_cmp(a: Point, b: Point) -> Ordering {
    half(a)
        .cmp(&half(b))
        .then_with(|| 0.cmp(&cross(a, b)))
}

/// Index-`p` sublattice spanned by the rows `(a, b)` and `(0, d)` with
/// `ad = p` and `0 <= b < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Sublattice {
    pub a: i64,
    pub b: i64,
    pub d: i64,
}

impl Sublattice {
    pub fn new(a: i64, b: i64, d: i64) -> Result<Self> {
        if a <= 0 || d <= 0 || !(0..d).contains(&b) {
            return Err(Error::InvalidParameter(format!(
                "({a},{b};0,{d}) is not in Hermite normal form"
            )));
        }
        Ok(Self { a, b, d })
    }

    pub fn index(&self) -> i64 {
        self.a * self.d
    }

    pub fn contains(&self, (x, y): Point) -> bool {
        x % self.a == 0 && (y - (x / self.a) * self.b) % self.d == 0
    }

    /// The unique Hermite form of the lattice `{f(P) : P ∈ S}` for a
    /// unimodular map `f`.
    fn image(&self, f: impl Fn(Point) -> Point) -> Sublattice {
        let g1 = f((self.a, self.b));
        let g2 = f((0, self.d));
        *all_sublattices(self.index())
            .iter()
            .find(|t| t.contains(g1) && t.contains(g2))
            .expect("unimodular image has the same index")
    }

    /// `S* = {P : P·S ⊆ pℤ}`.
    pub fn dual(&self) -> Sublattice {
        let p = self.index();
        *all_sublattices(p)
            .iter()
            .find(|t| {
                let gens = [(t.a, t.b), (0, t.d)];
                let mine = [(self.a, self.b), (0, self.d)];
                gens.iter()
                    .all(|&g| mine.iter().all(|&m| modulo(dot(g, m), p) == 0))
            })
            .expect("the dual is an index-p lattice")
    }

    /// Points of the compact boundary of the hull of the nonzero points in
    /// the closed first quadrant, from the x-axis to the y-axis, including
    /// every lattice point on each edge.
    pub fn hull_chain(&self) -> Vec<Point> {
        let p = self.index();
        let pts: Vec<Point> = (0..=p)
            .flat_map(|x| (0..=p).map(move |y| (x, y)))
            .filter(|&v| v != (0, 0) && self.contains(v))
            .collect();
        let x0 = (1..=p).find(|&x| self.contains((x, 0))).expect("(p,0) ∈ S");
        let mut chain = vec![(x0, 0)];
        let mut cur = (x0, 0);
        while cur.0 > 0 {
            let mut best: Option<Point> = None;
            for &r in pts.iter().filter(|r| r.0 < cur.0 && r.1 > cur.1) {
                let Some(b) = best else {
                    best = Some(r);
                    continue;
                };
                let turn = cross((b.0 - cur.0, b.1 - cur.1), (r.0 - cur.0, r.1 - cur.1));
                // The origin lies to the left of the chain direction.
                let closer = dot((r.0 - cur.0, r.1 - cur.1), (r.0 - cur.0, r.1 - cur.1))
                    < dot((b.0 - cur.0, b.1 - cur.1), (b.0 - cur.0, b.1 - cur.1));
                if turn > 0 || (turn == 0 && closer) {
                    best = Some(r);
                }
            }
            cur = best.expect("the y-axis point ends the chain");
            chain.push(cur);
        }
        chain
    }

    /// `(a, b, c, d)` for consecutive chain points `(a, c)`, `(b, d)`.
    pub fn boundary_segments(&self) -> Vec<HeckeQuad> {
        self.hull_chain()
            .windows(2)
            .map(|w| HeckeQuad {
                a: w[0].0,
                b: w[1].0,
                c: w[0].1,
                d: w[1].1,
            })
            .collect()
    }

    /// Primitive directions of all rays, counterclockwise from `(1, 0)`.
    pub fn rays(&self) -> Vec<Point> {
        let mut dirs: Vec<Point> = Vec::new();
        let quadrant_maps: [fn(Point) -> Point; 4] = [
            |(x, y)| (x, y),
            |(x, y)| (-x, y),
            |(x, y)| (-x, -y),
            |(x, y)| (x, -y),
        ];
        for f in quadrant_maps {
            // Every map is an involution, so it carries hulls back and forth.
            let t = self.image(f);
            dirs.extend(t.hull_chain().into_iter().map(|v| primitive(f(v))));
        }
        dirs.sort_by(|&a, &b| angle_cmp(a, b));
        dirs.dedup();
        dirs
    }

    pub fn on_ray(&self, v: Point) -> bool {
        v != (0, 0) && self.rays().contains(&primitive(v))
    }

    pub fn cone_of(&self, v: Point) -> Result<Cone> {
        if v == (0, 0) || !self.contains(v) {
            return Err(Error::Precondition(format!("{v:?} is not a nonzero point of S")));
        }
        let rays = self.rays();
        let dir = primitive(v);
        if rays.contains(&dir) {
            return Ok(Cone::Ray(dir));
        }
        let pos = rays.partition_point(|&r| angle_cmp(r, dir) == Ordering::Less);
        let lo = rays[(pos + rays.len() - 1) % rays.len()];
        let hi = rays[pos % rays.len()];
        Ok(Cone::Open(lo, hi))
    }
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<({},{}),(0,{})>", self.a, self.b, self.d)
    }
}

/// A ray, or the open cone swept counterclockwise from the first ray to the
/// second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cone {
    Ray(Point),
    Open(Point, Point),
}

/// All sublattices of index `p`, one Hermite form each. `p = 1` gives ℤ².
pub fn all_sublattices(p: i64) -> Vec<Sublattice> {
    let mut out = Vec::new();
    for a in 1..=p {
        if p % a != 0 {
            continue;
        }
        let d = p / a;
        for b in 0..d {
            out.push(Sublattice { a, b, d });
        }
    }
    out
}

pub fn sublattices_index_p(p: u64) -> Result<Vec<Sublattice>> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    Ok(all_sublattices(p as i64))
}

fn strictly_between(lo: Point, hi: Point, v: Point) -> bool {
    // lo -> hi counterclockwise, sweeping less than π here.
    cross(lo, v) > 0 && cross(v, hi) > 0
}

/// The region `C(base)` for a point `base` on a non-axis ray of `lattice`:
/// points with positive scalar product with `base`, minus the closed cones of
/// `lattice*` adjacent to `base^⊥`. Returns `(inside, on_boundary)`.
pub fn c_region(lattice: &Sublattice, base: Point, candidate: Point) -> Result<(bool, bool)> {
    if !lattice.on_ray(base) {
        return Err(Error::Precondition(format!("{base:?} is not on a ray")));
    }
    if base.0 == 0 || base.1 == 0 {
        return Err(Error::Unsupported(
            "C-region for a base on a coordinate axis".into(),
        ));
    }
    let dual_rays = lattice.dual().rays();
    let n = dual_rays.len();
    let perp = primitive((-base.1, base.0));
    let pos = |r: Point| dual_rays.iter().position(|&x| x == r).expect("rotation of a ray");
    // Neighbours of ±base^⊥ on the side facing base.
    let i = pos(perp);
    let j = pos((-perp.0, -perp.1));
    let (side_i, side_j) = if dot(dual_rays[(i + n - 1) % n], base) > 0 {
        (dual_rays[(i + n - 1) % n], dual_rays[(j + 1) % n])
    } else {
        (dual_rays[(i + 1) % n], dual_rays[(j + n - 1) % n])
    };
    let (lo, hi) = if cross(side_i, side_j) > 0 {
        (side_i, side_j)
    } else {
        (side_j, side_i)
    };
    if candidate == (0, 0) {
        return Ok((false, false));
    }
    let inside = strictly_between(lo, hi, candidate);
    let dir = primitive(candidate);
    let boundary = dir == lo || dir == hi;
    Ok((inside, boundary))
}

pub fn c_region_contains(lattice: &Sublattice, base: Point, candidate: Point) -> Result<bool> {
    c_region(lattice, base, candidate).map(|(inside, _)| inside)
}

/// `A_{α,β} = β^r (-α)^s δ̄^{(pu,pv)}_{α,β}` with
/// `δ̄^{(a,b)}_{α,β} = δ(α≡a)δ(β≡b) + (-1)^k δ(α≡-a)δ(β≡-b)` mod `l`.
pub fn a_term(alpha: i64, beta: i64, r: u32, s: u32, pu: i64, pv: i64, l: i64) -> Rational {
    let k = r + s + 2;
    let hit = |x: i64, y: i64| modulo(alpha - x, l) == 0 && modulo(beta - y, l) == 0;
    let mut delta = Rational::zero();
    if hit(pu, pv) {
        delta += rat(1);
    }
    if hit(-pu, -pv) {
        delta += if k % 2 == 0 { rat(1) } else { rat(-1) };
    }
    if delta.is_zero() {
        return delta;
    }
    delta * num_traits::pow(rat(beta), r as usize) * num_traits::pow(rat(-alpha), s as usize)
}

/// Open first quadrant, open second quadrant.
fn in_q1(v: Point) -> bool {
    v.0 > 0 && v.1 > 0
}

fn in_q2(v: Point) -> bool {
    v.0 < 0 && v.1 > 0
}

/// Coordinates of `m` in the basis `(a, c)`, `(b, d)`, scaled by `ad - bc > 0`.
fn cone_coords(h: &HeckeQuad, m: Point) -> (i64, i64) {
    (m.0 * h.d - m.1 * h.b, h.a * m.1 - h.c * m.0)
}

fn contribution(quads: &[HeckeQuad], q: &IQuad, weight: &Rational) -> Rational {
    let m = q.m();
    let k = q.k();
    let mut total = Rational::zero();
    for h in quads {
        let (x1, x2) = cone_coords(h, m);
        let km = (h.a * k.0 + h.c * k.1, h.b * k.0 + h.d * k.1);
        if x1 > 0 && x2 > 0 && in_q1(km) {
            total += weight;
        }
        if x1 < 0 && x2 > 0 && in_q2(km) {
            total -= weight;
        }
    }
    if in_q1(m) && in_q1(k) {
        total -= weight;
    }
    if in_q2(m) && in_q2(k) {
        total += weight;
    }
    total
}

/// Per-lattice data reused across many cancellation checks.
#[derive(Clone, Debug)]
pub struct InsideContext {
    pub lattice: Sublattice,
    pub dual: Sublattice,
    pub quads: Vec<HeckeQuad>,
    lattice_rays: Vec<Point>,
    dual_rays: Vec<Point>,
}

impl InsideContext {
    pub fn new(lattice: Sublattice) -> Self {
        let dual = lattice.dual();
        Self {
            lattice,
            dual,
            quads: lattice.boundary_segments(),
            lattice_rays: lattice.rays(),
            dual_rays: dual.rays(),
        }
    }

    fn admissible(&self, q: &IQuad) -> Result<()> {
        if !self.lattice.contains(q.m()) || !self.dual.contains(q.k()) {
            return Err(Error::Precondition(format!("{q} is not in S × S*")));
        }
        let on = |rays: &[Point], v: Point| v == (0, 0) || rays.contains(&primitive(v));
        if on(&self.lattice_rays, q.m()) || on(&self.dual_rays, q.k()) {
            return Err(Error::Precondition(format!("{q} touches a ray")));
        }
        Ok(())
    }

    /// The Σ1 - Σ2 - Σ3 + Σ4 total at `q` and `-q`.
    pub fn total(&self, l: u64, r: u32, s: u32, u: i64, v: i64, q: &IQuad) -> Result<Rational> {
        self.admissible(q)?;
        let p = self.lattice.index();
        let weight = |x: &IQuad| a_term(x.k1, x.k2, r, s, p * u, p * v, l as i64);
        let neg = q.neg();
        Ok(contribution(&self.quads, q, &weight(q)) + contribution(&self.quads, &neg, &weight(&neg)))
    }

    /// Every admissible signed quadruple over `pD` with entries in
    /// `[-2pD, 2pD]`.
    pub fn admissible_quads(&self, d: u64) -> Vec<IQuad> {
        let target = self.lattice.index() * d as i64;
        let bound = 2 * target;
        let grid = |lat: Sublattice, rays: &[Point]| -> Vec<Point> {
            (-bound..=bound)
                .flat_map(|x| (-bound..=bound).map(move |y| (x, y)))
                .filter(|&v| v != (0, 0) && lat.contains(v) && !rays.contains(&primitive(v)))
                .collect()
        };
        let ms = grid(self.lattice, &self.lattice_rays);
        let ks = grid(self.dual, &self.dual_rays);
        let mut out = Vec::new();
        for &m in &ms {
            for &k in &ks {
                if dot(m, k) == target {
                    out.push(IQuad::new(m.0, k.0, m.1, k.1));
                }
            }
        }
        out
    }
}

/// The Σ1 - Σ2 - Σ3 + Σ4 total at `q` and `-q` for the lattice `s_lat`,
/// where `q` has `(m1, m2) ∈ S` and `(k1, k2) ∈ S*` off all rays and
/// `m1 k1 + m2 k2 = pD`.
#[allow(clippy::too_many_arguments)]
pub fn inside_cancellation_check(
    p: u64,
    d: u64,
    l: u64,
    r: u32,
    s: u32,
    u: i64,
    v: i64,
    s_lat: &Sublattice,
    q: &IQuad,
) -> Result<Rational> {
    if s_lat.index() != p as i64 {
        return Err(Error::Precondition("lattice index differs from p".into()));
    }
    if q.value() != p as i64 * d as i64 {
        return Err(Error::Precondition(format!(
            "{q} does not lie over pD = {}",
            p as i64 * d as i64
        )));
    }
    InsideContext::new(*s_lat).total(l, r, s, u, v, q)
}

pub fn admissible_quads(s_lat: &Sublattice, d: u64) -> Vec<IQuad> {
    InsideContext::new(*s_lat).admissible_quads(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn merel_sets() {
        assert_eq!(enumerate_h(1), vec![HeckeQuad { a: 1, b: 0, c: 0, d: 1 }]);
        let mut h2 = enumerate_h(2);
        h2.sort();
        let mut expect: Vec<HeckeQuad> = [(1, 0, 0, 2), (2, 1, 0, 1), (1, 0, 1, 2), (2, 0, 0, 1)]
            .iter()
            .map(|&(a, b, c, d)| HeckeQuad { a, b, c, d })
            .collect();
        expect.sort();
        assert_eq!(h2, expect);
        assert_eq!(enumerate_h(3).len(), 7);
        for n in 1..=12 {
            let h = enumerate_h(n);
            assert!(h.iter().all(|q| q.det() == n as i64 && q.a > q.b && q.d > q.c && q.b >= 0 && q.c >= 0));
            let mut sorted = h.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), h.len());
        }
    }

    #[test]
    fn i_sets() {
        assert!(enumerate_i(1).is_empty());
        assert_eq!(enumerate_i(2), vec![IQuad::new(1, 1, 1, 1)]);
        assert_eq!(enumerate_i(6).len(), 20);
        for q in enumerate_i(17) {
            assert_eq!(q.value(), 17);
        }
    }

    #[test]
    fn thread_maps() {
        assert_eq!(thread_down(&IQuad::new(2, 3, 1, 1)), Some(IQuad::new(3, 1, 2, 2)));
        assert_eq!(thread_down(&IQuad::new(1, 1, 1, 1)), None);
        for d in 1..=30 {
            for q in enumerate_i(d) {
                if let Some(x) = thread_down(&q) {
                    assert_eq!(x.value(), q.value());
                    assert_eq!(thread_up(&x), Some(q));
                }
                if let Some(x) = thread_up(&q) {
                    assert_eq!(thread_down(&x), Some(q));
                }
            }
        }
        assert_eq!(threads(2), vec![vec![IQuad::new(1, 1, 1, 1)]]);
    }

    #[test]
    fn sublattice_basics() {
        assert_eq!(sublattices_index_p(2).unwrap().len(), 3);
        assert_eq!(sublattices_index_p(3).unwrap().len(), 4);
        assert!(sublattices_index_p(4).is_err());
        for p in [2, 3, 5, 7, 11, 13] {
            for s in sublattices_index_p(p).unwrap() {
                let pi = p as i64;
                assert!(s.contains((pi, 0)) && s.contains((0, pi)));
                assert_eq!(s.dual().dual(), s);
                for x in -3 * pi..=3 * pi {
                    for y in -3 * pi..=3 * pi {
                        assert_eq!(s.dual().contains((-y, x)), s.contains((x, y)));
                    }
                }
            }
        }
        let s = Sublattice::new(2, 0, 1).unwrap();
        assert_eq!(s.dual(), Sublattice::new(1, 0, 2).unwrap());
    }

    #[test]
    fn segments_match_merel() {
        let total: usize = sublattices_index_p(2)
            .unwrap()
            .iter()
            .map(|s| s.boundary_segments().len())
            .sum();
        assert_eq!(total, 4);
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut got: BTreeMap<HeckeQuad, usize> = BTreeMap::new();
            for s in sublattices_index_p(p).unwrap() {
                for q in s.boundary_segments() {
                    assert_eq!(q.det(), p as i64);
                    *got.entry(q).or_default() += 1;
                }
            }
            let mut expect: BTreeMap<HeckeQuad, usize> = BTreeMap::new();
            for q in enumerate_h(p) {
                *expect.entry(q).or_default() += 1;
            }
            assert_eq!(got, expect, "p = {p}");
        }
    }

    #[test]
    fn rays_and_cones() {
        let z2 = Sublattice::new(1, 0, 1).unwrap();
        assert_eq!(z2.rays(), vec![(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let even = Sublattice::new(1, 1, 2).unwrap();
        assert!(even.rays().contains(&(1, 1)));
        assert_eq!(even.cone_of((2, 2)).unwrap(), Cone::Ray((1, 1)));
        assert_eq!(even.cone_of((3, 1)).unwrap(), Cone::Open((1, 0), (1, 1)));
        assert!(even.cone_of((1, 0)).is_err());
    }

    #[test]
    fn c_regions() {
        let even = Sublattice::new(1, 1, 2).unwrap();
        assert!(c_region_contains(&even, (1, 1), (1, 1)).unwrap());
        assert!(!c_region_contains(&even, (1, 1), (-1, -3)).unwrap());
        assert!(matches!(
            c_region_contains(&even, (2, 0), (1, 1)),
            Err(Error::Unsupported(_))
        ));
        let s = Sublattice::new(1, 2, 5).unwrap();
        for base in s.rays().into_iter().filter(|r| r.0 != 0 && r.1 != 0) {
            for x in -6..=6 {
                for y in -6..=6 {
                    assert_eq!(
                        c_region(&s, base, (x, y)).unwrap(),
                        c_region(&s, (-base.0, -base.1), (-x, -y)).unwrap()
                    );
                    if dot(base, (x, y)) <= 0 {
                        assert!(!c_region_contains(&s, base, (x, y)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn inside_cancels() {
        for p in [2u64, 3] {
            for s_lat in sublattices_index_p(p).unwrap() {
                for d in 1..=6 {
                    for q in admissible_quads(&s_lat, d) {
                        assert!(inside_cancellation_check(p, d + 1, 5, 1, 0, 1, 2, &s_lat, &q).is_err());
                        let t = inside_cancellation_check(p, d, 5, 1, 0, 1, 2, &s_lat, &q).unwrap();
                        assert!(t.is_zero(), "{s_lat} {q}");
                    }
                }
            }
        }
    }
}
