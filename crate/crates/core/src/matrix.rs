//! Small dense complex matrices and the elimination routines the rest of the
//! crate is built on (determinant, inverse, rank, least-squares coordinates).
//!
//! Dimensions in this crate never exceed a few dozen, so everything is a
//! plain row-major `Vec<Complex64>` with textbook algorithms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative pivot size below which a matrix is treated as singular.
pub const SINGULAR_TOL: f64 = 1e-10;

/// Pivot threshold used by [`rank`] after each vector is normalised.
pub const RANK_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// An `n x n` complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn diagonal(values: &[Complex64]) -> Self {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { ZERO })
    }

    /// Builds a matrix from rows, rejecting ragged or non-finite input.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        let m = Self { n, entries };
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(m)
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn from_columns(columns: &[Vec<Complex64>]) -> Self {
        let n = columns.len();
        Self::from_fn(n, |i, j| columns[j][i])
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise difference divided by `max(1, |self|, |other|)`.
    pub fn rel_diff(&self, other: &SquareMatrix) -> f64 {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        let diff = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        diff / 1f64.max(self.max_abs()).max(other.max_abs())
    }

    pub fn approx_eq(&self, other: &SquareMatrix, tol: f64) -> bool {
        self.n == other.n && self.rel_diff(other) <= tol
    }

    /// Deviation from Hermiticity, relative to the matrix magnitude.
    pub fn hermitian_defect(&self) -> f64 {
        self.rel_diff(&self.adjoint())
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.entries
            .iter()
            .all(|z| z.im.abs() <= tol * 1f64.max(z.norm()))
    }

    pub fn mat_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.n, v.len(), "matrix-vector dimension mismatch");
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Assembles `[[a, b], [c, d]]` from four equally sized blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.n;
        assert!(b.n == n && c.n == n && d.n == n, "block size mismatch");
        Self::from_fn(2 * n, |i, j| {
            let block = match (i < n, j < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            block.get(i % n, j % n)
        })
    }

    /// Extracts the `size x size` block starting at `(row, col)`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> Self {
        Self::from_fn(size, |i, j| self.get(row + i, col + j))
    }

    pub fn lu(&self) -> Lu {
        Lu::new(self)
    }

    pub fn det(&self) -> Complex64 {
        self.lu().det()
    }

    pub fn is_singular(&self) -> bool {
        self.lu().is_singular()
    }

    pub fn inverse(&self) -> Result<Self> {
        let lu = self.lu();
        if lu.is_singular() {
            return Err(Error::NotInvertible);
        }
        let columns: Vec<_> = (0..self.n)
            .map(|j| {
                let mut e = vec![ZERO; self.n];
                e[j] = ONE;
                lu.solve(&e)
            })
            .collect();
        Ok(Self::from_columns(&columns))
    }

    /// Solves `self * x = rhs`.
    pub fn solve(&self, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
        let lu = self.lu();
        if lu.is_singular() {
            return Err(Error::NotInvertible);
        }
        Ok(lu.solve(rhs))
    }

    /// Spectral norm, via power iteration on `A* A`.
    pub fn operator_norm(&self) -> f64 {
        let gram = &self.adjoint() * self;
        let n = self.n;
        let mut best = 0.0f64;
        for start in 0..2 {
            let mut v: Vec<Complex64> = (0..n)
                .map(|k| Complex64::new(1.0 + (k * (start + 1)) as f64 * 0.37, 0.11 * k as f64))
                .collect();
            let mut lambda = 0.0;
            for _ in 0..500 {
                let w = gram.mat_vec(&v);
                let norm = vec_norm(&w);
                if norm == 0.0 {
                    lambda = 0.0;
                    break;
                }
                let next = norm / vec_norm(&v);
                v = w.iter().map(|z| z / norm).collect();
                if (next - lambda).abs() <= 1e-15 * next {
                    lambda = next;
                    break;
                }
                lambda = next;
            }
            best = best.max(lambda);
        }
        best.sqrt()
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, z) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{z}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        out
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;

    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;

    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &SquareMatrix {
    type Output = SquareMatrix;

    fn neg(self) -> SquareMatrix {
        self.scale(-ONE)
    }
}

/// LU factorisation with partial pivoting.
#[derive(Clone, Debug)]
pub struct Lu {
    n: usize,
    factors: Vec<Complex64>,
    perm: Vec<usize>,
    swaps: usize,
    /// Smallest pivot magnitude divided by the largest entry of the input.
    pub min_pivot_ratio: f64,
}

impl Lu {
    fn new(m: &SquareMatrix) -> Self {
        let n = m.n;
        let mut a = m.entries.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        let scale = m.max_abs();
        let mut min_pivot = f64::INFINITY;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap_or(k);
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = a[k * n + k];
            min_pivot = min_pivot.min(pivot.norm());
            if pivot == ZERO {
                continue;
            }
            for i in k + 1..n {
                let factor = a[i * n + k] / pivot;
                a[i * n + k] = factor;
                for j in k + 1..n {
                    let t = a[k * n + j];
                    a[i * n + j] -= factor * t;
                }
            }
        }
        let min_pivot_ratio = if n == 0 {
            1.0
        } else if scale == 0.0 {
            0.0
        } else {
            min_pivot / scale
        };
        Self {
            n,
            factors: a,
            perm,
            swaps,
            min_pivot_ratio,
        }
    }

    pub fn is_singular(&self) -> bool {
        self.min_pivot_ratio.is_nan() || self.min_pivot_ratio < SINGULAR_TOL
    }

    pub fn det(&self) -> Complex64 {
        let n = self.n;
        let sign = if self.swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
        (0..n).map(|i| self.factors[i * n + i]).product::<Complex64>() * sign
    }

    fn solve(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 0..n {
            for k in 0..i {
                let t = x[k];
                x[i] -= self.factors[i * n + k] * t;
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let t = x[k];
                x[i] -= self.factors[i * n + k] * t;
            }
            x[i] /= self.factors[i * n + i];
        }
        x
    }
}

pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Rank of a family of vectors of equal length.
///
/// Each vector is normalised first, so the result does not change when
/// inputs are rescaled by nonzero scalars or reordered.
pub fn rank(vectors: &[Vec<Complex64>]) -> Result<usize> {
    let first = vectors.first().ok_or(Error::Empty)?;
    let len = first.len();
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        if v.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: v.len(),
            });
        }
        let norm = vec_norm(v);
        if norm > 0.0 {
            rows.push(v.iter().map(|z| z / norm).collect::<Vec<_>>());
        }
    }
    let mut rank = 0;
    let mut col_used = vec![false; len];
    while rank < rows.len() {
        // complete pivoting over the remaining rows and columns
        let mut best = (0.0, 0, 0);
        for (r, row) in rows.iter().enumerate().skip(rank) {
            for (c, z) in row.iter().enumerate() {
                if !col_used[c] && z.norm() > best.0 {
                    best = (z.norm(), r, c);
                }
            }
        }
        let (size, r, c) = best;
        if size <= RANK_TOL {
            break;
        }
        rows.swap(rank, r);
        col_used[c] = true;
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[c] / pivot_row[c];
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= factor * p;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Orthonormalised family of linearly independent vectors (modified
/// Gram-Schmidt), used to express vectors in the original, non-orthogonal
/// basis.
#[derive(Clone, Debug)]
pub struct Basis {
    len: usize,
    q: Vec<Vec<Complex64>>,
    // upper triangular: original_j = sum_i r[i][j] q_i
    r: Vec<Vec<Complex64>>,
}

impl Basis {
    /// Greedily keeps the vectors that add a new direction.
    ///
    /// Returns the basis together with the indices of the retained inputs.
    pub fn select(vectors: &[Vec<Complex64>]) -> Result<(Self, Vec<usize>)> {
        let len = vectors.first().ok_or(Error::Empty)?.len();
        let mut basis = Basis {
            len,
            q: Vec::new(),
            r: Vec::new(),
        };
        let mut kept = Vec::new();
        for (idx, v) in vectors.iter().enumerate() {
            if v.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: v.len(),
                });
            }
            if basis.try_push(v) {
                kept.push(idx);
            }
        }
        Ok((basis, kept))
    }

    /// Requires every input to be independent.
    pub fn new(vectors: &[Vec<Complex64>]) -> Result<Self> {
        let (basis, kept) = Self::select(vectors)?;
        if kept.len() != vectors.len() {
            return Err(Error::InvalidAlgebra(format!(
                "basis vectors are linearly dependent (rank {} of {})",
                kept.len(),
                vectors.len()
            )));
        }
        Ok(basis)
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub(crate) fn try_push(&mut self, v: &[Complex64]) -> bool {
        let norm = vec_norm(v);
        if norm == 0.0 {
            return false;
        }
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.q.len() + 1);
        for q in &self.q {
            let c: Complex64 = q.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
            for (x, qi) in w.iter_mut().zip(q) {
                *x -= c * qi;
            }
            coeffs.push(c);
        }
        // second pass for numerical orthogonality
        for (k, q) in self.q.iter().enumerate() {
            let c: Complex64 = q.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
            for (x, qi) in w.iter_mut().zip(q) {
                *x -= c * qi;
            }
            coeffs[k] += c;
        }
        let rest = vec_norm(&w);
        if rest <= RANK_TOL * norm {
            return false;
        }
        coeffs.push(Complex64::new(rest, 0.0));
        self.q.push(w.iter().map(|z| z / rest).collect());
        for (k, row) in self.r.iter_mut().enumerate() {
            row.push(coeffs[k]);
        }
        let mut last = vec![ZERO; self.q.len()];
        last[self.q.len() - 1] = coeffs[self.q.len() - 1];
        self.r.push(last);
        true
    }

    /// Coordinates of `v` in the original basis vectors, plus the residual
    /// norm of the part of `v` outside the span (relative to `max(1, |v|)`).
    pub fn coordinates(&self, v: &[Complex64]) -> Result<(Vec<Complex64>, f64)> {
        if v.len() != self.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: v.len(),
            });
        }
        let k = self.q.len();
        let mut w = v.to_vec();
        let mut y = vec![ZERO; k];
        for _ in 0..2 {
            for (i, q) in self.q.iter().enumerate() {
                let c: Complex64 = q.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
                for (x, qi) in w.iter_mut().zip(q) {
                    *x -= c * qi;
                }
                y[i] += c;
            }
        }
        let residual = vec_norm(&w) / 1f64.max(vec_norm(v));
        let mut x = vec![ZERO; k];
        for i in (0..k).rev() {
            let mut s = y[i];
            for j in i + 1..k {
                s -= self.r[i][j] * x[j];
            }
            x[i] = s / self.r[i][i];
        }
        Ok((x, residual))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn det_and_inverse_of_2x2() {
        let m = SquareMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        assert!((m.det() - c(-2.0, 0.0)).norm() < 1e-14);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).approx_eq(&SquareMatrix::identity(2), 1e-14));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = SquareMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        assert!(m.is_singular());
        assert_eq!(m.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let err = SquareMatrix::from_rows(vec![vec![c(1.0, 0.0)], vec![]]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn rank_counts_independent_directions() {
        let v = vec![c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0)];
        let w: Vec<_> = v.iter().map(|z| z * c(0.0, 3.0)).collect();
        let u = vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
        assert_eq!(rank(&[v.clone(), w]).unwrap(), 1);
        assert_eq!(rank(&[v, u]).unwrap(), 2);
        assert_eq!(rank(&[]), Err(Error::Empty));
    }

    #[test]
    fn basis_coordinates_recover_combination() {
        let a = vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
        let b = vec![c(0.0, 0.0), c(1.0, 1.0), c(1.0, 0.0)];
        let basis = Basis::new(&[a.clone(), b.clone()]).unwrap();
        let target: Vec<_> = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x * c(2.0, -1.0) + y * c(0.5, 0.0))
            .collect();
        let (coords, residual) = basis.coordinates(&target).unwrap();
        assert!(residual < 1e-14);
        assert!((coords[0] - c(2.0, -1.0)).norm() < 1e-13);
        assert!((coords[1] - c(0.5, 0.0)).norm() < 1e-13);
        let (_, off) = basis
            .coordinates(&[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)])
            .unwrap();
        assert!(off > 0.1);
    }

    #[test]
    fn operator_norm_of_scaled_identity() {
        let m = SquareMatrix::identity(4).scale(c(-2.0, 0.0));
        assert!((m.operator_norm() - 2.0).abs() < 1e-12);
        let d = SquareMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 3.0)]);
        assert!((d.operator_norm() - 3.0).abs() < 1e-9);
    }

    #[test]
    fn blocks_round_trip() {
        let a = SquareMatrix::identity(2);
        let b = SquareMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let z = SquareMatrix::zeros(2);
        let m = SquareMatrix::from_blocks(&a, &b, &z, &a);
        assert_eq!(m.dim(), 4);
        assert_eq!(m.block(0, 2, 2), b);
        assert_eq!(m.block(2, 0, 2), z);
    }
}
