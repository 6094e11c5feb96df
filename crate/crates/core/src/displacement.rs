//! Shift, phase, displacement and displaced-parity operators.
//!
//! Every operator here maps each position basis vector to a phase times
//! another basis vector. [`MonomialOperator`] keeps that form (one target and
//! one phase per column) so traces against a density matrix cost `O(d^n)`;
//! [`MonomialOperator::to_matrix`] gives the dense matrix.

use num_complex::Complex64;

use crate::error::{QpsError, Result};
use crate::linalg::ComplexMatrix;
use crate::ring::{half_inverse, omega, DigitVector, GlobalIndex, SystemShape};

/// A point `(alpha_0..alpha_{n-1}, beta_0..beta_{n-1})` of `[Z(d) x Z(d)]^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalPhasePoint {
    pub alphas: DigitVector,
    pub betas: DigitVector,
}

impl LocalPhasePoint {
    pub fn new(shape: &SystemShape, alphas: DigitVector, betas: DigitVector) -> Result<Self> {
        for v in [&alphas, &betas] {
            if v.len() != shape.n() {
                return Err(QpsError::DimensionMismatch {
                    expected: shape.n(),
                    found: v.len(),
                });
            }
            if v.modulus() != shape.d() as i64 {
                return Err(QpsError::InvalidModulus(v.modulus()));
            }
        }
        Ok(LocalPhasePoint { alphas, betas })
    }

    pub fn from_ints(shape: &SystemShape, alphas: &[i64], betas: &[i64]) -> Result<Self> {
        Self::new(shape, shape.digits(alphas)?, shape.digits(betas)?)
    }

    pub fn origin(shape: &SystemShape) -> Self {
        LocalPhasePoint {
            alphas: shape.zero_digits(),
            betas: shape.zero_digits(),
        }
    }

    /// The point whose coordinates are the digits of two global labels.
    pub fn from_globals(shape: &SystemShape, alpha: GlobalIndex, beta: GlobalIndex) -> Self {
        LocalPhasePoint {
            alphas: shape.digits_at(shape.index_of(alpha)),
            betas: shape.digits_at(shape.index_of(beta)),
        }
    }

    pub fn neg(&self) -> Self {
        LocalPhasePoint {
            alphas: self.alphas.neg(),
            betas: self.betas.neg(),
        }
    }

    pub fn add(&self, other: &LocalPhasePoint) -> Self {
        LocalPhasePoint {
            alphas: self.alphas.add(&other.alphas),
            betas: self.betas.add(&other.betas),
        }
    }

    /// `sum_r (alpha_r beta'_r - alpha'_r beta_r)`, not reduced.
    pub fn symplectic(&self, other: &LocalPhasePoint) -> i64 {
        self.alphas.dot(&other.betas) - other.alphas.dot(&self.betas)
    }
}

/// A point `(alpha, beta)` of `Z(d^n) x Z(d^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GlobalPhasePoint {
    pub alpha: GlobalIndex,
    pub beta: GlobalIndex,
}

impl GlobalPhasePoint {
    pub fn new(shape: &SystemShape, alpha: GlobalIndex, beta: GlobalIndex) -> Result<Self> {
        for j in [alpha, beta] {
            if j.modulus() != shape.dim() as i64 {
                return Err(QpsError::InvalidModulus(j.modulus()));
            }
        }
        Ok(GlobalPhasePoint { alpha, beta })
    }

    /// Point from arbitrary integers, reduced mod `d^n`.
    pub fn from_ints(shape: &SystemShape, alpha: i64, beta: i64) -> Self {
        GlobalPhasePoint {
            alpha: shape.global(alpha),
            beta: shape.global(beta),
        }
    }

    pub fn origin(shape: &SystemShape) -> Self {
        Self::from_ints(shape, 0, 0)
    }

    pub fn neg(&self, shape: &SystemShape) -> Self {
        Self::from_ints(shape, -self.alpha.value(), -self.beta.value())
    }

    /// `alpha beta' - alpha' beta`, not reduced.
    pub fn symplectic(&self, other: &GlobalPhasePoint) -> i128 {
        self.alpha.value() as i128 * other.beta.value() as i128
            - other.alpha.value() as i128 * self.beta.value() as i128
    }
}

/// Operator sending `|X; i>` to `phases[i] |X; targets[i]>` (basis positions).
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialOperator {
    targets: Vec<usize>,
    phases: Vec<Complex64>,
}

impl MonomialOperator {
    fn build(shape: &SystemShape, f: impl Fn(usize) -> (usize, Complex64)) -> Self {
        let (targets, phases) = (0..shape.dim()).map(f).unzip();
        MonomialOperator { targets, phases }
    }

    pub fn dim(&self) -> usize {
        self.targets.len()
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.dim(), self.dim());
        for (c, (&r, &z)) in self.targets.iter().zip(&self.phases).enumerate() {
            m[(r, c)] = z;
        }
        m
    }

    /// `Tr(m A)` for a square matrix `m` of matching size.
    pub fn trace_against(&self, m: &ComplexMatrix) -> Result<Complex64> {
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(QpsError::DimensionMismatch {
                expected: self.dim(),
                found: m.rows(),
            });
        }
        Ok(self
            .targets
            .iter()
            .zip(&self.phases)
            .enumerate()
            .map(|(c, (&r, &z))| m[(c, r)] * z)
            .sum())
    }
}

fn shifted_digits(shape: &SystemShape, i: usize, betas: &DigitVector) -> Result<(DigitVector, usize)> {
    let j = shape.digits_at(i);
    let target = shape.index_of_digits(&j.add(betas))?;
    Ok((j, target))
}

fn check_digits(shape: &SystemShape, v: &DigitVector) -> Result<()> {
    LocalPhasePoint::new(shape, v.clone(), shape.zero_digits()).map(|_| ())
}

fn check_global(shape: &SystemShape, j: GlobalIndex) -> Result<()> {
    GlobalPhasePoint::new(shape, j, j).map(|_| ())
}

/// `X^{beta_0} x .. x X^{beta_{n-1}}`: digitwise shift, no carry.
pub fn x_shift_local(shape: &SystemShape, betas: &DigitVector) -> Result<ComplexMatrix> {
    check_digits(shape, betas)?;
    let one = Complex64::new(1.0, 0.0);
    Ok(MonomialOperator::build(shape, |i| (shifted_digits(shape, i, betas).expect("validated").1, one)).to_matrix())
}

/// `Z^{alpha_0} x .. x Z^{alpha_{n-1}}`: phase `omega_d(sum_r alpha_r j_r)`.
pub fn z_phase_local(shape: &SystemShape, alphas: &DigitVector) -> Result<ComplexMatrix> {
    check_digits(shape, alphas)?;
    let d = shape.d() as i64;
    Ok(MonomialOperator::build(shape, |i| (i, omega(d, alphas.dot(&shape.digits_at(i)) as i128))).to_matrix())
}

/// `X_G(beta)`: shift by `beta` mod `d^n`, with carries.
pub fn x_shift_global(shape: &SystemShape, beta: GlobalIndex) -> Result<ComplexMatrix> {
    check_global(shape, beta)?;
    let one = Complex64::new(1.0, 0.0);
    Ok(MonomialOperator::build(shape, |i| {
        let target = shape.global(shape.label_at(i).value() + beta.value());
        (shape.index_of(target), one)
    })
    .to_matrix())
}

/// `Z_G(alpha)`: phase `omega_{d^n}(alpha j)`.
pub fn z_phase_global(shape: &SystemShape, alpha: GlobalIndex) -> Result<ComplexMatrix> {
    check_global(shape, alpha)?;
    let m = shape.dim() as i64;
    Ok(MonomialOperator::build(shape, |i| {
        (i, omega(m, alpha.value() as i128 * shape.label_at(i).value() as i128))
    })
    .to_matrix())
}

/// `D_L(alpha, beta) |j> = omega_d(2^{-1} sum alpha_r beta_r + sum alpha_r j_r) |j + beta>`.
pub fn displacement_local_op(shape: &SystemShape, p: &LocalPhasePoint) -> Result<MonomialOperator> {
    LocalPhasePoint::new(shape, p.alphas.clone(), p.betas.clone())?;
    let d = shape.d() as i64;
    let half = half_inverse(d)?.value() as i128;
    let base = half * p.alphas.dot(&p.betas) as i128;
    Ok(MonomialOperator::build(shape, |i| {
        let (j, target) = shifted_digits(shape, i, &p.betas).expect("validated");
        (target, omega(d, base + p.alphas.dot(&j) as i128))
    }))
}

/// `D_G(alpha, beta) |j> = omega_{d^n}(2^{-1} alpha beta + alpha j) |j + beta>`.
pub fn displacement_global_op(shape: &SystemShape, p: &GlobalPhasePoint) -> Result<MonomialOperator> {
    GlobalPhasePoint::new(shape, p.alpha, p.beta)?;
    let m = shape.dim() as i64;
    let half = half_inverse(m)?.value() as i128;
    let (a, b) = (p.alpha.value() as i128, p.beta.value() as i128);
    let base = half * a * b;
    Ok(MonomialOperator::build(shape, |i| {
        let j = shape.label_at(i).value();
        let target = shape.index_of(shape.global(j + p.beta.value()));
        (target, omega(m, base + a * j as i128))
    }))
}

/// `P_L(gamma, delta) = D_L F_L^2 D_L^dagger`, i.e. `|j> -> omega_d(2 gamma.(delta - j)) |2 delta - j>`.
pub fn parity_local_op(shape: &SystemShape, p: &LocalPhasePoint) -> Result<MonomialOperator> {
    LocalPhasePoint::new(shape, p.alphas.clone(), p.betas.clone())?;
    let d = shape.d() as i64;
    let two_delta = p.betas.add(&p.betas);
    Ok(MonomialOperator::build(shape, |i| {
        let j = shape.digits_at(i);
        let diff = p.betas.add(&j.neg());
        let target = shape.index_of_digits(&two_delta.add(&j.neg())).expect("validated");
        (target, omega(d, 2 * p.alphas.dot(&diff) as i128))
    }))
}

/// `P_G(gamma, delta) = D_G F_G^2 D_G^dagger`, i.e. `|j> -> omega_{d^n}(2 gamma (delta - j)) |2 delta - j>`.
pub fn parity_global_op(shape: &SystemShape, p: &GlobalPhasePoint) -> Result<MonomialOperator> {
    GlobalPhasePoint::new(shape, p.alpha, p.beta)?;
    let m = shape.dim() as i64;
    let (g, dl) = (p.alpha.value() as i128, p.beta.value() as i128);
    Ok(MonomialOperator::build(shape, |i| {
        let j = shape.label_at(i).value();
        let target = shape.index_of(shape.global(2 * p.beta.value() - j));
        (target, omega(m, 2 * g * (dl - j as i128)))
    }))
}

pub fn displacement_local(shape: &SystemShape, p: &LocalPhasePoint) -> Result<ComplexMatrix> {
    displacement_local_op(shape, p).map(|op| op.to_matrix())
}

pub fn displacement_global(shape: &SystemShape, p: &GlobalPhasePoint) -> Result<ComplexMatrix> {
    displacement_global_op(shape, p).map(|op| op.to_matrix())
}

pub fn parity_local(shape: &SystemShape, p: &LocalPhasePoint) -> Result<ComplexMatrix> {
    parity_local_op(shape, p).map(|op| op.to_matrix())
}

pub fn parity_global(shape: &SystemShape, p: &GlobalPhasePoint) -> Result<ComplexMatrix> {
    parity_global_op(shape, p).map(|op| op.to_matrix())
}
