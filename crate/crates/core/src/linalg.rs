//! Dense complex matrices and vectors.
//!
//! Storage is row-major. Hermitian eigendecomposition is delegated to
//! `nalgebra`; everything else is written out directly since the matrices
//! involved are at most a few thousand rows.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{QpsError, Result};
use crate::ring::SystemShape;
use crate::tolerance;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:>8.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrices must be non-empty");
        ComplexMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c);
            }
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(QpsError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(QpsError::Format("matrix entries must be finite".into()));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &z) in diag.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let diag: Vec<Complex64> = diag.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_diagonal(&diag)
    }

    /// `|a><b|`.
    pub fn outer(a: &StateVector, b: &StateVector) -> Self {
        Self::from_fn(a.dim(), b.dim(), |r, c| a[r] * b[c].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> StateVector {
        StateVector::new((0..self.rows).map(|r| self[(r, c)]).collect())
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(QpsError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(QpsError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    fn zip_same_shape(
        &self,
        other: &ComplexMatrix,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(QpsError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_same_shape(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_same_shape(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> ComplexMatrix {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Kronecker product; `self`'s index varies slowest.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = ComplexMatrix::zeros(rows, cols);
        for ar in 0..self.rows {
            for ac in 0..self.cols {
                let a = self[(ar, ac)];
                if a == ZERO {
                    continue;
                }
                for br in 0..other.rows {
                    for bc in 0..other.cols {
                        out[(ar * other.rows + br, ac * other.cols + bc)] = a * other[(br, bc)];
                    }
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn trace(&self) -> Result<Complex64> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self[(i, i)]).sum())
    }

    /// `sqrt(sum |a_ij|^2)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`; infinite on shape mismatch.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |A - A^dagger|`, infinite for non-square input.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst: f64 = 0.0;
        for r in 0..n {
            for c in r..n {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// `max |A A^dagger - 1|`, infinite for non-square input.
    pub fn unitary_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let prod = &(self * &self.dagger());
        prod.max_abs_diff(&ComplexMatrix::identity(self.rows))
    }

    pub fn pow(&self, k: u32) -> Result<ComplexMatrix> {
        let n = self.require_square()?;
        let mut result = ComplexMatrix::identity(n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if self.cols != v.dim() {
            return Err(QpsError::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok(StateVector::new(
            (0..self.rows)
                .map(|r| self.row(r).iter().zip(v.entries()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// `<a| self |b>`.
    pub fn sandwich(&self, a: &StateVector, b: &StateVector) -> Result<Complex64> {
        overlap(a, &self.apply(b)?)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

// Operator forms panic on shape mismatch; use the `try_*`/`matmul` methods
// when shapes come from outside.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

/// `Tr(AB)` without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    if a.cols != b.rows || a.rows != b.cols {
        return Err(QpsError::DimensionMismatch {
            expected: a.cols,
            found: b.rows,
        });
    }
    let mut acc = ZERO;
    for r in 0..a.rows {
        for k in 0..a.cols {
            acc += a.data[r * a.cols + k] * b.data[k * b.cols + r];
        }
    }
    Ok(acc)
}

/// Operator acting with `factors[r]` on component `r`.
///
/// Component 0 is the least significant digit of the basis index, so the
/// matrix is the Kronecker product taken in reverse: `f_{n-1} x .. x f_0`.
pub fn tensor_product(factors: &[ComplexMatrix]) -> ComplexMatrix {
    let (last, rest) = factors.split_last().expect("at least one factor");
    rest.iter().rev().fold(last.clone(), |acc, f| acc.kron(f))
}

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V diag(f(lambda)) V^dagger`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let n = self.values.len();
        let weights: Vec<Complex64> = self.values.iter().map(|&x| f(x)).collect();
        let v = &self.vectors;
        let mut scaled = v.clone();
        for r in 0..n {
            for c in 0..n {
                scaled[(r, c)] *= weights[c];
            }
        }
        &scaled * &v.dagger()
    }
}

fn to_nalgebra(m: &ComplexMatrix) -> DMatrix<Complex64> {
    DMatrix::from_row_slice(m.rows, m.cols, &m.data)
}

pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = h.require_square()?;
    let dev = h.hermitian_deviation();
    if dev > tolerance::CONSTRUCTION {
        return Err(QpsError::NotHermitian(dev));
    }
    let eig = nalgebra::SymmetricEigen::try_new(to_nalgebra(h), f64::EPSILON, 0).ok_or(QpsError::NoConvergence)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    h.require_square()?;
    let dev = h.hermitian_deviation();
    if dev > tolerance::CONSTRUCTION {
        return Err(QpsError::NotHermitian(dev));
    }
    let mut values: Vec<f64> = to_nalgebra(h).symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// `exp(i t H)` through the spectral decomposition of `H`.
pub fn unitary_exponential(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(h)?;
    Ok(eig.map_spectrum(|x| Complex64::from_polar(1.0, t * x)))
}

/// `Tr_{i != keep} rho` for a `d^n x d^n` matrix.
pub fn partial_trace(rho: &ComplexMatrix, shape: &SystemShape, keep: usize) -> Result<ComplexMatrix> {
    if keep >= shape.n() {
        return Err(QpsError::ComponentOutOfRange {
            index: keep,
            n: shape.n(),
        });
    }
    if rho.rows != shape.dim() || rho.cols != shape.dim() {
        return Err(QpsError::DimensionMismatch {
            expected: shape.dim(),
            found: rho.rows.max(rho.cols),
        });
    }
    let d = shape.d();
    let stride = d.pow(keep as u32);
    let digit = |i: usize| (i / stride) % d;
    let mut out = ComplexMatrix::zeros(d, d);
    for r in 0..shape.dim() {
        let rest_r = r - digit(r) * stride;
        for a in 0..d {
            let c = rest_r + a * stride;
            out[(digit(r), a)] += rho[(r, c)];
        }
    }
    Ok(out)
}

/// Dense column vector.
#[derive(Clone, PartialEq)]
pub struct StateVector {
    entries: Vec<Complex64>,
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.iter()).finish()
    }
}

impl StateVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        assert!(!entries.is_empty(), "state vectors must be non-empty");
        StateVector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![ZERO; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Complex64> {
        self.entries
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> StateVector {
        StateVector::new(self.entries.iter().map(|&z| z * s).collect())
    }

    /// Unit-norm copy; errors on the zero vector.
    pub fn normalized(&self) -> Result<StateVector> {
        let norm = self.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(QpsError::InvalidState("cannot normalize a zero vector".into()));
        }
        Ok(self.scale(Complex64::new(1.0 / norm, 0.0)))
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for StateVector {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.entries[i]
    }
}

impl IndexMut<usize> for StateVector {
    fn index_mut(&mut self, i: usize) -> &mut Complex64 {
        &mut self.entries[i]
    }
}

/// `<a|b>`: conjugate-linear in `a`.
pub fn overlap(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return Err(QpsError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.entries.iter().zip(&b.entries).map(|(x, y)| x.conj() * y).sum())
}
