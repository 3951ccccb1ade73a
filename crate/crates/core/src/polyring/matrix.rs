//! Dense exact matrices, row reduction and an incremental sparse echelon
//! form for rank computations over large, sparse systems.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{denominator_lcm, Rational};
use crate::error::{domain, Result};

/// A dense `rows × cols` matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return domain("ragged rows");
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("rectangular literal")
    }

    /// Parses whitespace-separated rationals, one row per non-empty line.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split_whitespace().map(str::parse).collect::<Result<Vec<Rational>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Sub-matrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> QMatrix {
        let mut m = QMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> (QMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let sub = &f * m.get(r, j);
                    if !sub.is_zero() {
                        let v = m.get(i, j) - &sub;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut e = SparseEchelon::new();
        for i in 0..self.rows {
            e.insert(SparseVector::from_dense(self.row(i)));
        }
        e.rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact inverse, if the matrix is square and nonsingular.
    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (red, rank, pivots) = aug.rref();
        if rank < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(red.select(&(0..n).collect::<Vec<_>>(), &cols))
    }

    /// Determinant by fraction-free Bareiss elimination on the matrix with
    /// denominators cleared row by row.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return domain("determinant of a non-square matrix");
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let l = denominator_lcm(row.iter());
            a.push(
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect(),
            );
            scale *= l;
        }
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(Rational::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let det = Rational::from_bigint(a[n - 1][n - 1].clone() * sign);
        Ok(det / Rational::from_bigint(scale))
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Free function form of [`QMatrix::rref`].
pub fn rref(m: &QMatrix) -> (QMatrix, usize, Vec<usize>) {
    m.rref()
}

/// A sparse vector of rationals keyed by coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVector {
    entries: BTreeMap<usize, Rational>,
}

impl SparseVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVector {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn from_map(entries: BTreeMap<usize, Rational>) -> Self {
        SparseVector {
            entries: entries.into_iter().filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    pub fn entries(&self) -> &BTreeMap<usize, Rational> {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Rational {
        self.entries.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(&i, x)| (i, x))
    }

    /// `self += f * other`.
    pub fn axpy(&mut self, f: &Rational, other: &SparseVector) {
        for (&i, x) in &other.entries {
            let v = self.get(i) + &(f * x);
            if v.is_zero() {
                self.entries.remove(&i);
            } else {
                self.entries.insert(i, v);
            }
        }
    }

    pub fn scale(&mut self, f: &Rational) {
        for x in self.entries.values_mut() {
            *x = &*x * f;
        }
    }

    pub fn dot(&self, dense: &[Rational]) -> Rational {
        self.entries
            .iter()
            .filter_map(|(&i, x)| dense.get(i).map(|y| x * y))
            .sum()
    }
}

/// Rows kept in reduced echelon form, one per pivot column. Inserting a row
/// reduces it against the stored pivots and, if anything survives, stores it
/// and clears its pivot column from the other rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVector>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// The reduced basis, ordered by pivot column.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVector> {
        self.rows.values()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVector> {
        self.rows.get(&pivot)
    }

    /// Remainder of `v` modulo the stored span.
    pub fn reduce(&self, mut v: SparseVector) -> SparseVector {
        // pivots are strictly increasing and stored rows have no entries in
        // other pivot columns, so one forward sweep suffices
        let pivots: Vec<usize> = v
            .entries
            .keys()
            .copied()
            .filter(|k| self.rows.contains_key(k))
            .collect();
        for p in pivots {
            let f = v.get(p);
            if !f.is_zero() {
                v.axpy(&-&f, &self.rows[&p]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVector) -> bool {
        let mut v = self.reduce(v);
        let Some((p, lead)) = v.leading() else {
            return false;
        };
        let inv = lead.recip();
        v.scale(&inv);
        for row in self.rows.values_mut() {
            let f = row.get(p);
            if !f.is_zero() {
                row.axpy(&-&f, &v);
            }
        }
        self.rows.insert(p, v);
        true
    }
}
