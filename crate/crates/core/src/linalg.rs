//! Exact sparse linear algebra over the rationals.
//!
//! Everything here is exact: a vector lies in a span only when its residual
//! against the reduced basis is identically zero.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Sparse vector with no explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: BTreeMap<usize, Rational>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        let mut v = Self::new();
        v.set(index, Rational::one());
        v
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let mut v = Self::new();
        for (i, x) in values.iter().enumerate() {
            v.set(i, x.clone());
        }
        v
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (&i, x) in &self.entries {
            out[i] = x.clone();
        }
        out
    }

    pub fn get(&self, index: usize) -> Rational {
        self.entries.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, index: usize, value: Rational) {
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    /// `self[index] += value`.
    pub fn add_at(&mut self, index: usize, value: &Rational) {
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry(index).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&index);
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Rational, other: &SparseVec) {
        if factor.is_zero() {
            return;
        }
        for (&i, x) in &other.entries {
            self.add_at(i, &(factor * x));
        }
    }

    pub fn scaled(&self, factor: &Rational) -> SparseVec {
        if factor.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(&i, x)| (i, x * factor))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(&i, x)| (i, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(&i, x)| (i, x))
    }
}

impl std::ops::Add<&SparseVec> for &SparseVec {
    type Output = SparseVec;
    fn add(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl std::ops::Sub<&SparseVec> for &SparseVec {
    type Output = SparseVec;
    fn sub(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl std::ops::Neg for &SparseVec {
    type Output = SparseVec;
    fn neg(self) -> SparseVec {
        self.scaled(&-Rational::one())
    }
}

/// Sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Result<Self> {
        for r in &rows {
            if let Some(m) = r.max_index() {
                if m >= cols {
                    return Err(Error::DimensionMismatch {
                        expected: cols,
                        found: m + 1,
                    });
                }
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for (i, j, x) in entries {
            if i >= rows || j >= cols {
                return Err(Error::DimensionMismatch {
                    expected: rows.max(cols),
                    found: i.max(j) + 1,
                });
            }
            m.data[i].set(j, x);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row.iter() {
                t.data[j].set(i, x.clone());
            }
        }
        t
    }
}

/// Reduced row echelon basis of a row space.
///
/// Every pivot column holds a 1 in its own row and 0 in every other row, and
/// pivots are the leftmost nonzero entries, so the stored rows are the
/// canonical RREF of the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: BTreeMap<usize, usize>,
    // For each stored row, its expression in terms of the inserted vectors.
    combos: Option<Vec<SparseVec>>,
    inserted: usize,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: BTreeMap::new(),
            combos: None,
            inserted: 0,
        }
    }

    /// A basis that remembers how each row arose from the inserted vectors,
    /// so that membership queries can report a combination of the inputs.
    pub fn tracking(cols: usize) -> Self {
        Self {
            combos: Some(Vec::new()),
            ..Self::new(cols)
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Columns that are not pivots, in increasing order. These index the
    /// coordinates of the quotient by the row space.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.is_pivot(*c)).collect()
    }

    fn check_dim(&self, v: &SparseVec) -> Result<()> {
        match v.max_index() {
            Some(m) if m >= self.cols => Err(Error::DimensionMismatch {
                expected: self.cols,
                found: m + 1,
            }),
            _ => Ok(()),
        }
    }

    /// Residual of `v` against the basis together with the coefficients of
    /// the basis rows removed: `v - residual = sum coeffs[i] * rows[i]`.
    pub fn reduce(&self, v: &SparseVec) -> Result<(SparseVec, Vec<Rational>)> {
        self.check_dim(v)?;
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut residual = v.clone();
        for (row, c) in self.rows.iter().zip(&coeffs) {
            residual.add_scaled(&-c, row);
        }
        Ok((residual, coeffs))
    }

    /// Canonical representative of `v` modulo the row space.
    pub fn residual(&self, v: &SparseVec) -> Result<SparseVec> {
        self.reduce(v).map(|(r, _)| r)
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool> {
        self.residual(v).map(|r| r.is_zero())
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool> {
        let (mut residual, coeffs) = self.reduce(v)?;
        let index = self.inserted;
        self.inserted += 1;
        let Some((pivot, lead)) = residual.leading().map(|(p, x)| (p, x.clone())) else {
            return Ok(false);
        };
        let inv = lead.recip();
        residual = residual.scaled(&inv);
        let mut combo = None;
        if let Some(combos) = &self.combos {
            let mut c = SparseVec::unit(index);
            for (row_combo, k) in combos.iter().zip(&coeffs) {
                c.add_scaled(&-k, row_combo);
            }
            combo = Some(c.scaled(&inv));
        }
        for (i, row) in self.rows.iter_mut().enumerate() {
            let x = row.get(pivot);
            if !x.is_zero() {
                row.add_scaled(&-&x, &residual);
                if let (Some(combos), Some(c)) = (&mut self.combos, &combo) {
                    combos[i].add_scaled(&-&x, c);
                }
            }
        }
        // Keep rows ordered by pivot column.
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(pos, residual);
        self.pivots.insert(pos, pivot);
        if let (Some(combos), Some(c)) = (&mut self.combos, combo) {
            combos.insert(pos, c);
        }
        self.pivot_row = self
            .pivots
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i))
            .collect();
        Ok(true)
    }

    /// Expresses `v` as a combination of the inserted vectors, if it lies in
    /// their span. Only available on tracking bases.
    pub fn solve(&self, v: &SparseVec) -> Result<Option<SparseVec>> {
        let combos = self.combos.as_ref().ok_or(Error::Internal(
            "solve requires a tracking echelon basis".into(),
        ))?;
        let (residual, coeffs) = self.reduce(v)?;
        if !residual.is_zero() {
            return Ok(None);
        }
        let mut out = SparseVec::new();
        for (c, combo) in coeffs.iter().zip(combos) {
            out.add_scaled(c, combo);
        }
        Ok(Some(out))
    }
}

pub fn rref(m: &SparseMatrix) -> EchelonBasis {
    let mut basis = EchelonBasis::new(m.cols());
    for row in &m.data {
        basis
            .insert(row)
            .expect("matrix rows are within the column bound");
    }
    basis
}

pub fn rank(m: &SparseMatrix) -> usize {
    rref(m).rank()
}

/// Residual and coefficients of a dense vector against `b`.
pub fn reduce_against(v: &[Rational], b: &EchelonBasis) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if v.len() != b.cols() {
        return Err(Error::DimensionMismatch {
            expected: b.cols(),
            found: v.len(),
        });
    }
    let (r, c) = b.reduce(&SparseVec::from_dense(v))?;
    Ok((r.to_dense(v.len()), c))
}

pub fn in_span(v: &[Rational], b: &EchelonBasis) -> Result<bool> {
    reduce_against(v, b).map(|(r, _)| r.iter().all(Zero::is_zero))
}
