//! Truncated q-expansions with exact rational coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, rat, Rational};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::modlpoly::ModLPoly1;

/// `c_0 + c_1 q + ... + c_N q^N`, known exactly up to `q^N`.
///
/// The weight and level tags are informational only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
    pub weight: i64,
    pub level: u64,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn monomial(n: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    /// Panics on an empty coefficient list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series needs at least the constant term");
        Self {
            coeffs,
            weight: 0,
            level: 1,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn with_tags(mut self, weight: i64, level: u64) -> Self {
        self.weight = weight;
        self.level = level;
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: Rational) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        let order = order.min(self.order());
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        QSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
            weight: self.weight,
            level: self.level.max(other.level),
        }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    /// `self += c * other`, truncating to the smaller order.
    pub fn add_scaled(&mut self, c: &Rational, other: &QSeries) {
        if self.order() > other.order() {
            self.coeffs.truncate(other.order() + 1);
        }
        if c.is_zero() {
            return;
        }
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *x += c * y;
        }
    }

    /// Cauchy product; the weight tags add.
    pub fn multiply(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries {
            coeffs,
            weight: self.weight + other.weight,
            level: self.level.max(other.level),
        }
    }

    /// `D = q d/dq`, raising the weight tag by two.
    pub fn q_derivative(&self) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * rat(n as i64))
                .collect(),
            weight: self.weight + 2,
            level: self.level,
        }
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.coeffs)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            level: self.level,
            weight: self.weight,
            truncation: self.order(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<QSeries> {
        if j.coeffs.len() != j.truncation + 1 {
            return Err(Error::DimensionMismatch {
                expected: j.truncation + 1,
                found: j.coeffs.len(),
            });
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| {
                parse_rational(s)
                    .ok_or_else(|| Error::InvalidParameter(format!("bad rational {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries::from_coeffs(coeffs).with_tags(j.weight, j.level))
    }
}

/// Exchange format for a single series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub level: u64,
    pub weight: i64,
    pub truncation: usize,
    pub coeffs: Vec<String>,
}

impl fmt::Display for QSeries {
    /// `c0 + c1*q + c2*q^2 + …`; zero terms are skipped and unit
    /// coefficients are left implicit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match n {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{n}"),
            };
            let mag = c.abs();
            let body = if n == 0 {
                format_rational(&mag)
            } else if mag.is_one() {
                power
            } else {
                format!("{}*{power}", format_rational(&mag))
            };
            let neg = c.is_negative();
            out.push_str(match (out.is_empty(), neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            });
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} + …")
    }
}

/// `sum_{D>0} q^D sum_{d|D} h(d)` to order `order`.
pub fn divisor_sum_series(h: &ModLPoly1, order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    for d in 1..=order {
        let value = h.eval(d as i64);
        if value.is_zero() {
            continue;
        }
        for multiple in (d..=order).step_by(d) {
            s.coeffs[multiple] += &value;
        }
    }
    s.level = h.modulus();
    s
}
