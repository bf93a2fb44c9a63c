//! Dense polynomials in one and two variables over the rationals.

use num_traits::{One, Zero};

use crate::arith::{bernoulli_poly_coeffs, Rational};

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(e: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    /// `a*x + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `p(inner(x))`
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| if e % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn bernoulli(k: usize) -> Poly {
        Poly::new(bernoulli_poly_coeffs(k))
    }

    /// Lagrange interpolation through the given points (distinct abscissae).
    pub fn interpolate(points: &[(Rational, Rational)]) -> Poly {
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Poly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let denom = (xi - xj).recip();
                    basis = basis.mul(&Poly::linear(denom.clone(), -xj * &denom));
                }
            }
            acc = acc.add(&basis);
        }
        acc
    }
}

/// Bivariate polynomial: `coeffs[i]` is the coefficient of `x^i` as a
/// polynomial in `y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    coeffs: Vec<Poly>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `c * x^i * y^j`
    pub fn monomial(i: usize, j: usize, c: Rational) -> Self {
        let mut coeffs = vec![Poly::zero(); i + 1];
        coeffs[i] = Poly::monomial(j, c);
        Self::new(coeffs)
    }

    pub fn from_dense(table: &[Vec<Rational>]) -> Self {
        Self::new(table.iter().map(|row| Poly::new(row.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i`, a polynomial in `y`.
    pub fn x_coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.degree().map(|d| i + d))
            .max()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for p in self.coeffs.iter().rev() {
            acc = acc * x + p.eval(y);
        }
        acc
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly2::new((0..n).map(|i| self.x_coeff(i).add(&other.x_coeff(i))).collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        Poly2::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// `p(-x, -y)`
    pub fn reflect(&self) -> Poly2 {
        Poly2::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let r = p.reflect();
                    if i % 2 == 0 {
                        r
                    } else {
                        r.neg()
                    }
                })
                .collect(),
        )
    }

    /// `p(a*t, t)` as a polynomial in `t`.
    pub fn on_line(&self, a: &Rational) -> Poly {
        let line = Poly::monomial(1, a.clone());
        let mut acc = Poly::zero();
        for (i, p) in self.coeffs.iter().enumerate() {
            acc = acc.add(&line.pow(i).mul(p));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, rat};

    #[test]
    fn basic_ops() {
        let p = Poly::new(vec![rat(1), rat(2), rat(0)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.eval(&rat(3)), rat(7));
        assert_eq!(p.mul(&p).coeffs(), &[rat(1), rat(4), rat(4)]);
        assert_eq!(p.reflect().eval(&rat(3)), rat(-5));
        let sq = Poly::monomial(2, rat(1));
        assert_eq!(sq.compose(&Poly::linear(rat(2), rat(1))).eval(&rat(1)), rat(9));
    }

    #[test]
    fn interpolation() {
        let pts: Vec<_> = (0..4).map(|x| (rat(x), rat(x * x * x - 2 * x))).collect();
        let p = Poly::interpolate(&pts);
        assert_eq!(p.coeffs(), &[rat(0), rat(-2), rat(0), rat(1)]);
        assert_eq!(p.eval(&frac(1, 2)), frac(1, 8) - rat(1));
    }

    #[test]
    fn bivariate() {
        let g = Poly2::monomial(1, 2, rat(3)).add(&Poly2::monomial(0, 0, rat(1)));
        assert_eq!(g.eval(&rat(2), &rat(5)), rat(151));
        assert_eq!(g.reflect().eval(&rat(2), &rat(5)), rat(-149));
        assert_eq!(g.on_line(&rat(2)).coeffs(), &[rat(1), rat(0), rat(0), rat(6)]);
        assert_eq!(g.total_degree(), Some(3));
    }
}
