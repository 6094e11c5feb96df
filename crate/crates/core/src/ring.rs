//! Arithmetic in `Z(d)` and `Z(d^n)` with centered representatives.
//!
//! Every residue is stored in the centered period `[-(m-1)/2, (m-1)/2]` of
//! its (odd) modulus. A label of the n-partite system has two spellings: a
//! [`DigitVector`] `(j_0, .., j_{n-1})` over `Z(d)` and a [`GlobalIndex`] over
//! `Z(d^n)`, related by `j = j_0 + j_1 d + .. + j_{n-1} d^{n-1}`. The map is a
//! bijection of sets but not of rings: digitwise addition has no carry.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{QpsError, Result};

/// Largest Hilbert-space dimension accepted by [`SystemShape::new`].
pub const DEFAULT_DIM_CAP: usize = 10_000;

/// Single-qudit dimension `d`, number of components `n` and `dim = d^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SystemShape {
    d: usize,
    n: usize,
    dim: usize,
}

impl SystemShape {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        Self::with_cap(d, n, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(d: usize, n: usize, cap: usize) -> Result<Self> {
        if d < 3 || d.is_multiple_of(2) {
            return Err(QpsError::InvalidDimension(d));
        }
        if n == 0 {
            return Err(QpsError::NoComponents);
        }
        let too_large = QpsError::DimensionCap { d, n, cap };
        let dim = u32::try_from(n)
            .ok()
            .and_then(|e| d.checked_pow(e))
            .ok_or(too_large.clone())?;
        // keeps dim^2 comfortably inside i64 for phase arithmetic
        if dim > cap || dim > i32::MAX as usize {
            return Err(too_large);
        }
        Ok(SystemShape { d, n, dim })
    }

    /// A single qudit, used for reduced density matrices and d x d operators.
    pub fn single(d: usize) -> Result<Self> {
        Self::with_cap(d, 1, usize::MAX)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub(crate) fn d_i64(&self) -> i64 {
        self.d as i64
    }

    pub(crate) fn dim_i64(&self) -> i64 {
        self.dim as i64
    }

    /// Half-width of the centered period of `Z(d^n)`.
    pub fn half_dim(&self) -> i64 {
        (self.dim as i64 - 1) / 2
    }

    /// Basis position of a global label: `i = j + (d^n - 1)/2`.
    pub fn index_of(&self, j: GlobalIndex) -> usize {
        debug_assert_eq!(j.modulus(), self.dim_i64());
        (j.value() + self.half_dim()) as usize
    }

    /// Global label at basis position `i`.
    pub fn label_at(&self, i: usize) -> GlobalIndex {
        assert!(i < self.dim, "basis index {i} out of range");
        GlobalIndex(CenteredResidue {
            value: i as i64 - self.half_dim(),
            modulus: self.dim_i64(),
        })
    }

    /// All global labels in ascending (basis) order.
    pub fn global_labels(&self) -> impl Iterator<Item = GlobalIndex> + '_ {
        (0..self.dim).map(move |i| self.label_at(i))
    }

    /// Reduce an arbitrary integer to a global label.
    pub fn global(&self, x: i64) -> GlobalIndex {
        GlobalIndex(centered_reduce_unchecked(x as i128, self.dim_i64()))
    }

    /// Global label from a value that must already lie in the centered period.
    pub fn global_checked(&self, x: i64) -> Result<GlobalIndex> {
        if x.abs() > self.half_dim() {
            return Err(QpsError::LabelOutOfRange(format!(
                "{x} is outside [-{h}, {h}]",
                h = self.half_dim()
            )));
        }
        Ok(self.global(x))
    }

    /// Digit vector from integers; each entry is reduced mod d.
    pub fn digits(&self, digits: &[i64]) -> Result<DigitVector> {
        if digits.len() != self.n {
            return Err(QpsError::DimensionMismatch {
                expected: self.n,
                found: digits.len(),
            });
        }
        let d = self.d_i64();
        Ok(DigitVector {
            digits: digits
                .iter()
                .map(|&x| centered_reduce_unchecked(x as i128, d).value)
                .collect(),
            modulus: d,
        })
    }

    /// All-zero digit vector.
    pub fn zero_digits(&self) -> DigitVector {
        DigitVector {
            digits: vec![0; self.n],
            modulus: self.d_i64(),
        }
    }
}

/// An integer mod an odd `m`, held in the centered period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CenteredResidue {
    value: i64,
    modulus: i64,
}

impl CenteredResidue {
    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }
}

fn check_modulus(m: i64) -> Result<()> {
    if m < 1 || m % 2 == 0 {
        return Err(QpsError::InvalidModulus(m));
    }
    Ok(())
}

fn centered_reduce_unchecked(x: i128, m: i64) -> CenteredResidue {
    let r = x.rem_euclid(m as i128) as i64;
    let value = if r > (m - 1) / 2 { r - m } else { r };
    CenteredResidue { value, modulus: m }
}

/// Representative of `x mod m` in `[-(m-1)/2, (m-1)/2]`.
pub fn centered_reduce(x: i128, m: i64) -> Result<CenteredResidue> {
    check_modulus(m)?;
    Ok(centered_reduce_unchecked(x, m))
}

/// The element `2^{-1} = (m+1)/2` of `Z(m)`, centered.
pub fn half_inverse(m: i64) -> Result<CenteredResidue> {
    check_modulus(m)?;
    Ok(centered_reduce_unchecked((m as i128 + 1) / 2, m))
}

/// `exp(2 pi i a / m)`. The exponent is reduced exactly before the float step.
pub fn omega(m: i64, exponent: i128) -> Complex64 {
    assert!(m >= 1, "omega needs a positive modulus");
    let r = exponent.rem_euclid(m as i128) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / m as f64)
}

/// A label of `Z(d^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GlobalIndex(CenteredResidue);

impl GlobalIndex {
    pub fn value(&self) -> i64 {
        self.0.value
    }

    pub fn modulus(&self) -> i64 {
        self.0.modulus
    }

    pub fn residue(&self) -> CenteredResidue {
        self.0
    }
}

/// A label of `[Z(d)]^n`; digit 0 is the least significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitVector {
    digits: Vec<i64>,
    modulus: i64,
}

impl DigitVector {
    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Componentwise sum in `[Z(d)]^n` (no carry).
    pub fn add(&self, other: &DigitVector) -> DigitVector {
        self.zip_with(other, |a, b| a + b)
    }

    /// Componentwise product in `[Z(d)]^n`.
    pub fn mul(&self, other: &DigitVector) -> DigitVector {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn neg(&self) -> DigitVector {
        DigitVector {
            digits: self
                .digits
                .iter()
                .map(|&a| centered_reduce_unchecked(-(a as i128), self.modulus).value)
                .collect(),
            modulus: self.modulus,
        }
    }

    /// `sum_r a_r b_r`, not reduced.
    pub fn dot(&self, other: &DigitVector) -> i64 {
        assert_eq!(self.digits.len(), other.digits.len());
        self.digits.iter().zip(&other.digits).map(|(a, b)| a * b).sum()
    }

    fn zip_with(&self, other: &DigitVector, f: impl Fn(i128, i128) -> i128) -> DigitVector {
        assert_eq!(self.modulus, other.modulus, "digit moduli differ");
        assert_eq!(self.digits.len(), other.digits.len(), "digit lengths differ");
        DigitVector {
            digits: self
                .digits
                .iter()
                .zip(&other.digits)
                .map(|(&a, &b)| centered_reduce_unchecked(f(a as i128, b as i128), self.modulus).value)
                .collect(),
            modulus: self.modulus,
        }
    }
}

/// `j_0 + j_1 d + .. + j_{n-1} d^{n-1}` reduced into the centered period of `d^n`.
pub fn digits_to_global(j: &DigitVector, shape: &SystemShape) -> Result<GlobalIndex> {
    if j.len() != shape.n() {
        return Err(QpsError::DimensionMismatch {
            expected: shape.n(),
            found: j.len(),
        });
    }
    if j.modulus() != shape.d_i64() {
        return Err(QpsError::InvalidModulus(j.modulus()));
    }
    let d = shape.d_i64() as i128;
    let mut acc: i128 = 0;
    let mut weight: i128 = 1;
    for &digit in j.digits() {
        acc += digit as i128 * weight;
        weight *= d;
    }
    Ok(GlobalIndex(centered_reduce_unchecked(acc, shape.dim_i64())))
}

/// Inverse of [`digits_to_global`]: peel off centered digits, least significant first.
pub fn global_to_digits(j: GlobalIndex, shape: &SystemShape) -> Result<DigitVector> {
    if j.modulus() != shape.dim_i64() {
        return Err(QpsError::InvalidModulus(j.modulus()));
    }
    let d = shape.d_i64();
    let mut rest = j.value() as i128;
    let mut digits = Vec::with_capacity(shape.n());
    for _ in 0..shape.n() {
        let digit = centered_reduce_unchecked(rest, d).value;
        digits.push(digit);
        rest = (rest - digit as i128) / d as i128;
    }
    Ok(DigitVector { digits, modulus: d })
}

impl SystemShape {
    /// Digits of the label at basis position `i`.
    pub fn digits_at(&self, i: usize) -> DigitVector {
        global_to_digits(self.label_at(i), self).expect("label built from this shape")
    }

    /// Basis position of a digit label.
    pub fn index_of_digits(&self, j: &DigitVector) -> Result<usize> {
        Ok(self.index_of(digits_to_global(j, self)?))
    }
}
