//! Weight-k Manin symbols for Γ1(l).
//!
//! A generator `x^i y^{k-2-i}(u,v)` is stored at index `pair * (k-1) + i`
//! where `pair` indexes `(u,v)` in [`SymbolSpace::pairs`]. Matrices act on
//! the right: `P(x,y)(u,v) | g = P(ax+by, cx+dy)(au+cv, bu+dv)`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arith::{binomial_rat, gcd, gcd3, modulo, rat, Rational};
use crate::eisenstein::{EisLabel, PairLabel, TildeCache};
use crate::error::{Error, Result};
use crate::lattice::enumerate_h;
use crate::linalg::{EchelonBasis, SparseVec};
use crate::qseries::QSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A symbol as raw generator coordinates together with its canonical
/// representative in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolVector {
    pub raw: SparseVec,
    pub reduced: SparseVec,
}

impl SymbolVector {
    pub fn is_zero_in_quotient(&self) -> bool {
        self.reduced.is_zero()
    }

    pub fn same_class(&self, other: &SymbolVector) -> bool {
        self.reduced == other.reduced
    }
}

#[derive(Clone, Debug)]
pub struct SymbolSpace {
    level: u64,
    weight: u32,
    pairs: Vec<(u64, u64)>,
    pair_index: HashMap<(u64, u64), usize>,
    relations: EchelonBasis,
}

/// Coefficients of `(a x + b y)^r (c x + d y)^s`, indexed by the power of `x`.
fn expand(a: &Rational, b: &Rational, r: usize, c: &Rational, d: &Rational, s: usize) -> Vec<Rational> {
    let lin = |p: &Rational, q: &Rational, e: usize| -> Vec<Rational> {
        (0..=e)
            .map(|i| {
                binomial_rat(e as u64, i as u64)
                    * num_traits::pow(p.clone(), i)
                    * num_traits::pow(q.clone(), e - i)
            })
            .collect()
    };
    let f = lin(a, b, r);
    let g = lin(c, d, s);
    let mut out = vec![Rational::zero(); r + s + 1];
    for (i, x) in f.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in g.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl SymbolSpace {
    pub fn build(l: u64, k: u32) -> Result<Self> {
        if k < 2 || l < 1 {
            return Err(Error::InvalidParameter(format!(
                "symbol space needs k >= 2 and l >= 1, got (l,k) = ({l},{k})"
            )));
        }
        let li = l as i64;
        let mut pairs = Vec::new();
        for u in 0..l {
            for v in 0..l {
                if gcd3(u as i64, v as i64, li) == 1 {
                    pairs.push((u, v));
                }
            }
        }
        let pair_index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut space = SymbolSpace {
            level: l,
            weight: k,
            pairs,
            pair_index,
            relations: EchelonBasis::new(0),
        };
        let mut relations = EchelonBasis::new(space.num_generators());
        let s_mat = [0, -1, 1, 0];
        let t_mat = [0, -1, 1, -1];
        let t2_mat = [-1, 1, -1, 0];
        for p in 0..space.pairs.len() {
            let (u, v) = space.pairs[p];
            for r in 0..=(k as usize - 2) {
                let w = space.generator(r, u as i64, v as i64);
                let rel1 = &w + &space.act(&w, s_mat);
                relations.insert(&rel1)?;
                let rel2 = &(&w + &space.act(&w, t_mat)) + &space.act(&w, t2_mat);
                relations.insert(&rel2)?;
            }
        }
        space.relations = relations;
        Ok(space)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// The unimodular pairs `E_l`, in lexicographic order.
    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    fn degree(&self) -> usize {
        self.weight as usize - 2
    }

    pub fn num_generators(&self) -> usize {
        (self.degree() + 1) * self.pairs.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn relations(&self) -> &EchelonBasis {
        &self.relations
    }

    pub fn quotient_dim(&self) -> usize {
        self.num_generators() - self.relation_rank()
    }

    /// `(i, (u, v))` for a generator index: `x^i y^{k-2-i}(u,v)`.
    pub fn decode(&self, index: usize) -> (usize, (u64, u64)) {
        let width = self.degree() + 1;
        (index % width, self.pairs[index / width])
    }

    /// Index of `x^i y^{k-2-i}(u,v)`, or `None` for a degenerate pair.
    pub fn index(&self, i: usize, u: i64, v: i64) -> Option<usize> {
        let l = self.level as i64;
        let key = (modulo(u, l) as u64, modulo(v, l) as u64);
        self.pair_index
            .get(&key)
            .map(|p| p * (self.degree() + 1) + i)
    }

    /// `x^i y^{k-2-i}(u,v)`; zero for degenerate `(u,v)`.
    pub fn generator(&self, i: usize, u: i64, v: i64) -> SparseVec {
        assert!(i <= self.degree(), "x-degree exceeds k-2");
        self.index(i, u, v).map(SparseVec::unit).unwrap_or_default()
    }

    /// `sum_i poly[i] x^i y^{k-2-i}(u,v)`.
    fn place(&self, out: &mut SparseVec, factor: &Rational, poly: &[Rational], u: i64, v: i64) {
        let Some(base) = self.index(0, u, v) else {
            return;
        };
        for (i, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                out.add_at(base + i, &(factor * c));
            }
        }
    }

    /// Right action of the integer matrix `[a, b, c, d]`.
    pub fn act(&self, w: &SparseVec, m: [i64; 4]) -> SparseVec {
        let [a, b, c, d] = m;
        let n = self.degree();
        let mut out = SparseVec::new();
        for (idx, coeff) in w.iter() {
            let (r, (u, v)) = self.decode(idx);
            let (u, v) = (u as i64, v as i64);
            let poly = expand(&rat(a), &rat(b), r, &rat(c), &rat(d), n - r);
            self.place(&mut out, coeff, &poly, a * u + c * v, b * u + d * v);
        }
        out
    }

    pub fn vector(&self, raw: SparseVec) -> SymbolVector {
        let reduced = self
            .relations
            .residual(&raw)
            .expect("symbol vectors live in the generator space");
        SymbolVector { raw, reduced }
    }

    /// `x^r y^s(u,v) ↦ (-1)^r x^r y^s(-u,v)`.
    pub fn iota(&self, w: &SymbolVector) -> SymbolVector {
        let mut out = SparseVec::new();
        for (idx, c) in w.raw.iter() {
            let (r, (u, v)) = self.decode(idx);
            let j = self.index(r, -(u as i64), v as i64).expect("unimodular");
            out.add_at(j, &if r % 2 == 0 { c.clone() } else { -c });
        }
        self.vector(out)
    }

    /// `(w ± ι w) / 2`.
    pub fn symmetrize(&self, w: &SymbolVector, sign: Sign) -> SymbolVector {
        let iw = self.iota(w);
        let half = Rational::new(1.into(), 2.into());
        let combined = match sign {
            Sign::Plus => &w.raw + &iw.raw,
            Sign::Minus => &w.raw - &iw.raw,
        };
        self.vector(combined.scaled(&half))
    }

    /// Dimension of the `±` eigenspace of ι on the quotient.
    pub fn eigenspace_dim(&self, sign: Sign) -> usize {
        let mut image = EchelonBasis::new(self.num_generators());
        for idx in 0..self.num_generators() {
            let w = self.vector(SparseVec::unit(idx));
            let s = self.symmetrize(&w, sign);
            image.insert(&s.reduced).expect("same dimension");
        }
        image.rank()
    }

    /// `R_{(m,n)} = (m x + n y)^{k-2}(m,n)`, zero when `gcd(m,n,l) > 1`.
    /// The integers `m, n` enter the polynomial unreduced.
    pub fn r_symbol(&self, m: i64, n: i64, sign: Option<Sign>) -> SymbolVector {
        let mut out = SparseVec::new();
        if gcd3(m, n, self.level as i64) == 1 {
            let poly = expand(&rat(m), &rat(n), self.degree(), &rat(0), &rat(1), 0);
            self.place(&mut out, &Rational::one(), &poly, m, n);
        }
        let w = self.vector(out);
        match sign {
            Some(s) => self.symmetrize(&w, s),
            None => w,
        }
    }

    /// Merel's operator: `sum_{H(n)} (a x + b y)^r (c x + d y)^s (au+cv, bu+dv)`,
    /// dropping terms whose new pair is degenerate.
    pub fn hecke_tn(&self, w: &SymbolVector, n: i64) -> Result<SymbolVector> {
        if n <= 0 {
            return Err(Error::InvalidParameter(format!("T_n needs n >= 1, got {n}")));
        }
        let mut out = SparseVec::new();
        for q in enumerate_h(n as u64) {
            out = &out + &self.act(&w.raw, [q.a, q.b, q.c, q.d]);
        }
        Ok(self.vector(out))
    }

    /// `(u,v) ↦ (pu, pv)`.
    pub fn epsilon_diamond(&self, w: &SymbolVector, p: i64) -> Result<SymbolVector> {
        let l = self.level as i64;
        if gcd(p, l) != 1 {
            return Err(Error::NotCoprime { a: p, l });
        }
        let mut out = SparseVec::new();
        for (idx, c) in w.raw.iter() {
            let (r, (u, v)) = self.decode(idx);
            let j = self
                .index(r, p * u as i64, p * v as i64)
                .expect("unimodular");
            out.add_at(j, c);
        }
        Ok(self.vector(out))
    }

    /// μ on raw generator coordinates, as a combination of pair labels.
    pub fn mu_labels(&self, w: &SparseVec) -> Vec<(PairLabel, Rational)> {
        let n = self.degree();
        let mut acc: HashMap<PairLabel, Rational> = HashMap::new();
        for (idx, c) in w.iter() {
            let (r, (u, v)) = self.decode(idx);
            if let Some((label, sign)) = mu_label(r, n - r, u as i64, v as i64, self.level) {
                *acc.entry(label).or_insert_with(Rational::zero) += sign * c;
            }
        }
        let mut out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// μ of a symbol, expanded to order `cache.order()`.
    pub fn mu_series(&self, w: &SparseVec, cache: &mut TildeCache) -> QSeries {
        let mut s = QSeries::zero(cache.order());
        for (label, c) in self.mu_labels(w) {
            s.add_scaled(&c, &cache.pair(&label));
        }
        s.with_tags(self.weight as i64, self.level)
    }
}

/// Label and sign of `μ(x^r y^s(m,n)) = (-1)^s s̃^{(s+1)}_{m/l} s̃^{(r+1)}_{n/l}`.
fn mu_label(r: usize, s: usize, m: i64, n: i64, l: u64) -> Option<(PairLabel, Rational)> {
    if gcd3(m, n, l as i64) != 1 {
        return None;
    }
    let label = PairLabel::Product(
        EisLabel::new(l, m, s as u32 + 1),
        EisLabel::new(l, n, r as u32 + 1),
    );
    let sign = if s % 2 == 0 { rat(1) } else { rat(-1) };
    Some((label, sign))
}

/// `μ(x^r y^s(m,n))` to order `order`.
pub fn mu_image(r: usize, s: usize, m: i64, n: i64, l: u64, order: usize) -> Result<QSeries> {
    if r + s == 0 {
        return Err(Error::InvalidParameter(
            "μ is defined for weight k > 2, i.e. r + s >= 1".into(),
        ));
    }
    let k = (r + s + 2) as i64;
    match mu_label(r, s, m, n, l) {
        None => Ok(QSeries::zero(order).with_tags(k, l)),
        Some((label, sign)) => Ok(label.series(order)?.scale(&sign).with_tags(k, l)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_vector(space: &SymbolSpace, rng: &mut StdRng) -> SymbolVector {
        let mut raw = SparseVec::new();
        for _ in 0..4 {
            let idx = rng.gen_range(0..space.num_generators());
            raw.add_at(idx, &rat(rng.gen_range(-5..=5)));
        }
        space.vector(raw)
    }

    #[test]
    fn generator_counts() {
        let s = SymbolSpace::build(5, 2).unwrap();
        assert_eq!(s.pairs().len(), 24);
        assert_eq!(s.num_generators(), 24);
        let s = SymbolSpace::build(7, 3).unwrap();
        assert_eq!(s.num_generators(), 2 * 48);
    }

    #[test]
    fn dimension_fixtures() {
        // (5,2): 2g + c - 1 = 3 with g = 0 and 4 cusps.
        assert_eq!(SymbolSpace::build(5, 2).unwrap().quotient_dim(), 3);
        assert_eq!(SymbolSpace::build(7, 3).unwrap().quotient_dim(), 8);
        assert_eq!(SymbolSpace::build(5, 3).unwrap().quotient_dim(), 4);
        assert_eq!(SymbolSpace::build(5, 4).unwrap().quotient_dim(), 6);
    }

    #[test]
    fn eigenspaces_split_quotient() {
        for (l, k) in [(5, 2), (5, 3), (5, 4), (7, 3)] {
            let s = SymbolSpace::build(l, k).unwrap();
            assert_eq!(
                s.eigenspace_dim(Sign::Plus) + s.eigenspace_dim(Sign::Minus),
                s.quotient_dim()
            );
        }
    }

    #[test]
    fn relations_vanish() {
        let s = SymbolSpace::build(5, 3).unwrap();
        for row in s.relations().rows() {
            assert!(s.vector(row.clone()).is_zero_in_quotient());
        }
    }

    #[test]
    fn iota_examples() {
        let s = SymbolSpace::build(5, 4).unwrap();
        let w = s.vector(s.generator(0, 0, 1));
        assert_eq!(s.iota(&w).raw, w.raw);
        let w = s.vector(s.generator(1, 1, 1));
        assert_eq!(s.iota(&w).raw, s.generator(1, 4, 1).scaled(&rat(-1)));
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let v = random_vector(&s, &mut rng);
            assert_eq!(s.iota(&s.iota(&v)).raw, v.raw);
            let plus = s.symmetrize(&v, Sign::Plus);
            let minus = s.symmetrize(&v, Sign::Minus);
            assert_eq!(&plus.raw + &minus.raw, v.raw);
            assert_eq!(s.symmetrize(&plus, Sign::Plus), plus);
            assert_eq!(s.iota(&minus).raw, -&minus.raw);
        }
    }

    #[test]
    fn r_symbol_relations() {
        let mut rng = StdRng::seed_from_u64(11);
        for (l, k) in [(5, 3), (5, 4), (7, 3)] {
            let s = SymbolSpace::build(l, k).unwrap();
            assert!(s.r_symbol(l as i64, 2 * l as i64, None).raw.is_zero());
            for _ in 0..50 {
                let m = rng.gen_range(-20..=20);
                let n = rng.gen_range(-20..=20);
                let one = &s.r_symbol(m, n, None).raw + &s.r_symbol(-n, m, None).raw;
                assert!(s.vector(one).is_zero_in_quotient());
                let two = &(&s.r_symbol(m, n, None).raw + &s.r_symbol(-m - n, m, None).raw)
                    + &s.r_symbol(n, -m - n, None).raw;
                assert!(s.vector(two).is_zero_in_quotient());
            }
        }
    }

    #[test]
    fn r_symbol_uses_integers() {
        let s = SymbolSpace::build(5, 3).unwrap();
        // (6x + y)(1,1) differs from (x + y)(1,1).
        let a = s.r_symbol(6, 1, None).raw;
        let b = s.r_symbol(1, 1, None).raw;
        assert_ne!(a, b);
        assert_eq!(a.get(s.index(1, 1, 1).unwrap()), rat(6));
    }

    #[test]
    fn hecke_examples() {
        let s = SymbolSpace::build(5, 3).unwrap();
        let mut rng = StdRng::seed_from_u64(3);
        let w = s.vector(s.generator(0, 0, 1));
        assert_eq!(s.hecke_tn(&w, 1).unwrap().raw, w.raw);
        assert!(s.hecke_tn(&w, 0).is_err());
        // T_2 y(0,1): y(0,2) + (x + y)(0,1) + 2y(1,2) + 0 ... from the four quads.
        let t2 = s.hecke_tn(&w, 2).unwrap().raw;
        let mut expect = SparseVec::new();
        for (a, b, c, d) in [(1, 0, 0, 2), (2, 1, 0, 1), (1, 0, 1, 2), (2, 0, 0, 1)] {
            let single = s.act(&w.raw, [a, b, c, d]);
            expect = &expect + &single;
        }
        assert_eq!(t2, expect);
        for _ in 0..20 {
            let v = random_vector(&s, &mut rng);
            let t6 = s.hecke_tn(&v, 6).unwrap();
            let t23 = s.hecke_tn(&s.hecke_tn(&v, 3).unwrap(), 2).unwrap();
            let t32 = s.hecke_tn(&s.hecke_tn(&v, 2).unwrap(), 3).unwrap();
            assert!(t6.same_class(&t23));
            assert!(t6.same_class(&t32));
        }
    }

    #[test]
    fn diamond_examples() {
        let s = SymbolSpace::build(7, 3).unwrap();
        let mut rng = StdRng::seed_from_u64(5);
        assert!(s.epsilon_diamond(&s.vector(SparseVec::new()), 7).is_err());
        for _ in 0..20 {
            let v = random_vector(&s, &mut rng);
            assert_eq!(s.epsilon_diamond(&v, 8).unwrap().raw, v.raw);
            let pq = s.epsilon_diamond(&s.epsilon_diamond(&v, 3).unwrap(), 2).unwrap();
            assert_eq!(pq.raw, s.epsilon_diamond(&v, 6).unwrap().raw);
            let a = s.hecke_tn(&s.epsilon_diamond(&v, 3).unwrap(), 2).unwrap();
            let b = s.epsilon_diamond(&s.hecke_tn(&v, 2).unwrap(), 3).unwrap();
            assert!(a.same_class(&b));
        }
    }

    #[test]
    fn mu_examples() {
        assert!(mu_image(0, 0, 1, 1, 5, 5).is_err());
        let m = mu_image(1, 0, 1, 2, 5, 8).unwrap();
        let expect = crate::eisenstein::tilde_s(5, 1, 1, 8)
            .unwrap()
            .multiply(&crate::eisenstein::tilde_s(5, 2, 2, 8).unwrap());
        assert_eq!(m.coeffs(), expect.coeffs());
        let m = mu_image(0, 1, 1, 2, 5, 8).unwrap();
        let expect = crate::eisenstein::tilde_s(5, 1, 2, 8)
            .unwrap()
            .multiply(&crate::eisenstein::tilde_s(5, 2, 1, 8).unwrap());
        assert_eq!(m.coeffs(), expect.scale(&rat(-1)).coeffs());
        assert!(mu_image(1, 0, 5, 10, 5, 8).unwrap().is_zero());
    }
}
