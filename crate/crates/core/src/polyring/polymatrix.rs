//! Matrices with polynomial entries and their exterior powers.

use std::collections::BTreeMap;

use super::matrix::QMatrix;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::combinatorics::{binomial, subsets, PluckerIndex};
use crate::error::{domain, Result};

/// A sparse matrix of polynomials, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BTreeMap<usize, Polynomial>>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    pub fn from_rational(m: &QMatrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, Polynomial::constant(m.get(i, j).clone()));
            }
        }
        out
    }

    /// `Id + z·T` with `z` the variable of index `z_var`.
    pub fn identity_plus_scaled(t: &QMatrix, z_var: usize) -> Result<Self> {
        if t.rows() != t.cols() {
            return domain("Id + zT needs a square T");
        }
        let n = t.rows();
        let mut m = Self::identity(n);
        let z = Monomial::var(z_var);
        for i in 0..n {
            for j in 0..n {
                let c = t.get(i, j);
                if !c.is_zero() {
                    let v = m.get(i, j) + Polynomial::term(c.clone(), z.clone());
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Polynomial {
        self.entries[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if v.is_zero() {
            self.entries[i].remove(&j);
        } else {
            self.entries[i].insert(j, v);
        }
    }

    /// Nonzero entries of row `i`.
    pub fn row(&self, i: usize) -> &BTreeMap<usize, Polynomial> {
        &self.entries[i]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return domain("dimension mismatch in matrix product");
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
            for (&k, a) in &self.entries[i] {
                for (&j, b) in &other.entries[k] {
                    let e = acc.entry(j).or_default();
                    *e = &*e + &(a * b);
                }
            }
            acc.retain(|_, p| !p.is_zero());
            out.entries[i] = acc;
        }
        Ok(out)
    }

    /// Entry-wise coefficient of `z^i`, where all entries are polynomials in
    /// the single variable `z_var`.
    pub fn coefficient_matrix(&self, i: u32, z_var: usize) -> Result<QMatrix> {
        let mut out = QMatrix::zeros(self.rows, self.cols);
        let target = Monomial::var_pow(z_var, i);
        for (r, row) in self.entries.iter().enumerate() {
            for (&c, p) in row {
                if p.variables().iter().any(|&v| v != z_var) {
                    return domain("coefficient extraction needs univariate entries");
                }
                out.set(r, c, p.coefficient(&target));
            }
        }
        Ok(out)
    }

    /// The `l`-th exterior power: entry `(I, J)` is the minor on rows `I`
    /// and columns `J`, both in the lexicographic subset order.
    ///
    /// Rows of the wedge are built as exterior products of the rows of
    /// `self`, sharing prefixes across row sets; each partial product is a
    /// map from column subsets to minors of the leading rows.
    pub fn wedge_power(&self, l: usize) -> Result<PolyMatrix> {
        if !self.is_square() {
            return domain("exterior power of a non-square matrix");
        }
        let n = self.rows;
        if l > n {
            return domain(format!("exterior power {l} of a {n}x{n} matrix"));
        }
        if n > 63 {
            return domain("exterior powers are limited to n < 64");
        }
        let size = binomial(n, l);
        let index: BTreeMap<u64, usize> = subsets(n, l)?
            .iter()
            .enumerate()
            .map(|(k, s)| (s.mask(), k))
            .collect();
        let mut out = PolyMatrix::zeros(size, size);
        let mut row_index = 0usize;
        let mut start = BTreeMap::new();
        start.insert(0u64, Polynomial::one());
        self.wedge_rows(l, 0, &start, &index, &mut out, &mut row_index);
        debug_assert_eq!(row_index, size);
        Ok(out)
    }

    fn wedge_rows(
        &self,
        remaining: usize,
        first_row: usize,
        partial: &BTreeMap<u64, Polynomial>,
        index: &BTreeMap<u64, usize>,
        out: &mut PolyMatrix,
        row_index: &mut usize,
    ) {
        if remaining == 0 {
            for (mask, p) in partial {
                out.set(*row_index, index[mask], p.clone());
            }
            *row_index += 1;
            return;
        }
        for r in first_row..=self.rows - remaining {
            let next = wedge_with_row(partial, &self.entries[r]);
            self.wedge_rows(remaining - 1, r + 1, &next, index, out, row_index);
        }
    }
}

/// `(Σ_S c_S e_S) ∧ (Σ_j a_j e_j)`, with `e_S ∧ e_j = (-1)^{#{s ∈ S : s > j}} e_{S ∪ j}`.
fn wedge_with_row(
    partial: &BTreeMap<u64, Polynomial>,
    row: &BTreeMap<usize, Polynomial>,
) -> BTreeMap<u64, Polynomial> {
    let mut next: BTreeMap<u64, Polynomial> = BTreeMap::new();
    for (&mask, c) in partial {
        for (&j, a) in row {
            let bit = 1u64 << j;
            if mask & bit != 0 {
                continue;
            }
            let above = (mask >> (j + 1)).count_ones();
            let mut v = c * a;
            if above % 2 == 1 {
                v = -v;
            }
            let e = next.entry(mask | bit).or_default();
            *e = &*e + &v;
        }
    }
    next.retain(|_, p| !p.is_zero());
    next
}

/// Exterior power of a polynomial matrix.
pub fn wedge_power(m: &PolyMatrix, l: usize) -> Result<PolyMatrix> {
    m.wedge_power(l)
}

/// Exterior power of a rational matrix by one determinant per entry
/// (Bareiss elimination). Slow; serves as an independent check.
pub fn wedge_power_dense(m: &QMatrix, l: usize) -> Result<QMatrix> {
    let n = m.rows();
    if m.cols() != n || l > n {
        return domain("bad exterior power request");
    }
    let subs: Vec<PluckerIndex> = subsets(n, l)?;
    let idx = |s: &PluckerIndex| -> Vec<usize> { s.elements().iter().map(|e| e - 1).collect() };
    let mut out = QMatrix::zeros(subs.len(), subs.len());
    for (a, i) in subs.iter().enumerate() {
        for (b, j) in subs.iter().enumerate() {
            out.set(a, b, m.select(&idx(i), &idx(j)).determinant()?);
        }
    }
    Ok(out)
}

/// Row `rows` of the exterior power of a rational matrix: the maximal
/// minors of the sub-matrix on those rows, in lexicographic column order.
pub fn maximal_minors(m: &QMatrix) -> Result<Vec<Rational>> {
    let (k, n) = (m.rows(), m.cols());
    if k > n {
        return domain("more rows than columns");
    }
    let rows: Vec<usize> = (0..k).collect();
    subsets(n, k)?
        .iter()
        .map(|s| {
            let cols: Vec<usize> = s.elements().iter().map(|e| e - 1).collect();
            m.select(&rows, &cols).determinant()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn wedge_of_identity_and_diagonal() {
        for n in 0..6 {
            for l in 0..=n {
                let w = PolyMatrix::identity(n).wedge_power(l).unwrap();
                assert_eq!(w, PolyMatrix::identity(binomial(n, l)));
            }
        }
        let d = QMatrix::from_ints(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        let w = PolyMatrix::from_rational(&d).wedge_power(2).unwrap();
        let expected = QMatrix::from_ints(&[&[6, 0, 0], &[0, 10, 0], &[0, 0, 15]]);
        assert_eq!(w, PolyMatrix::from_rational(&expected));
        assert!(PolyMatrix::identity(3).wedge_power(4).is_err());
        let w0 = PolyMatrix::identity(4).wedge_power(0).unwrap();
        assert_eq!(w0, PolyMatrix::identity(1));
    }

    #[test]
    fn sparse_and_dense_routes_agree() {
        let m = QMatrix::from_rows(vec![
            vec![q(1), Rational::new(1, 2), q(0), q(-2)],
            vec![q(3), q(0), q(1), q(1)],
            vec![q(0), q(2), Rational::new(-3, 4), q(0)],
            vec![q(1), q(1), q(1), q(5)],
        ])
        .unwrap();
        for l in 0..=4 {
            let dense = wedge_power_dense(&m, l).unwrap();
            let sparse = PolyMatrix::from_rational(&m).wedge_power(l).unwrap();
            assert_eq!(sparse, PolyMatrix::from_rational(&dense), "l = {l}");
        }
    }

    #[test]
    fn coefficient_extraction() {
        let t = QMatrix::from_ints(&[&[0, 1], &[0, 0]]);
        let u = PolyMatrix::identity_plus_scaled(&t, 0).unwrap();
        assert_eq!(u.coefficient_matrix(0, 0).unwrap(), QMatrix::identity(2));
        assert_eq!(u.coefficient_matrix(1, 0).unwrap(), t);
        assert!(u.coefficient_matrix(2, 0).unwrap().is_zero());
        let mut bad = u.clone();
        bad.set(0, 0, Polynomial::var(1));
        assert!(bad.coefficient_matrix(0, 0).is_err());
    }
}
