//! Position, local-momentum and global-momentum basis vectors.

use num_complex::Complex64;

use crate::error::{QpsError, Result};
use crate::linalg::StateVector;
use crate::ring::{digits_to_global, omega, DigitVector, GlobalIndex, SystemShape};

pub use crate::linalg::overlap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Position,
    LocalMomentum,
    GlobalMomentum,
}

/// A basis label in either spelling; the two are related by the digit bijection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Global(GlobalIndex),
    Digits(DigitVector),
}

impl From<GlobalIndex> for Label {
    fn from(j: GlobalIndex) -> Self {
        Label::Global(j)
    }
}

impl From<DigitVector> for Label {
    fn from(j: DigitVector) -> Self {
        Label::Digits(j)
    }
}

impl From<&DigitVector> for Label {
    fn from(j: &DigitVector) -> Self {
        Label::Digits(j.clone())
    }
}

impl Label {
    /// Basis position of this label, validated against `shape`.
    pub fn index(&self, shape: &SystemShape) -> Result<usize> {
        match self {
            Label::Global(j) => {
                if j.modulus() != shape.dim() as i64 {
                    return Err(QpsError::LabelOutOfRange(format!(
                        "label {} has modulus {}, expected {}",
                        j.value(),
                        j.modulus(),
                        shape.dim()
                    )));
                }
                Ok(shape.index_of(*j))
            }
            Label::Digits(j) => shape.index_of_digits(j),
        }
    }

    pub fn digits(&self, shape: &SystemShape) -> Result<DigitVector> {
        Ok(shape.digits_at(self.index(shape)?))
    }

    pub fn global(&self, shape: &SystemShape) -> Result<GlobalIndex> {
        match self {
            Label::Global(_) => Ok(shape.label_at(self.index(shape)?)),
            Label::Digits(j) => digits_to_global(j, shape),
        }
    }
}

/// `|X; j>`.
pub fn position_state(shape: &SystemShape, label: impl Into<Label>) -> Result<StateVector> {
    let i = label.into().index(shape)?;
    Ok(StateVector::basis(shape.dim(), i))
}

/// `|P_L; j> = F_L |X; j>`, with entries `omega_d(sum_r j_r k_r)/sqrt(d^n)`.
pub fn local_momentum_state(shape: &SystemShape, label: impl Into<Label>) -> Result<StateVector> {
    let j = label.into().digits(shape)?;
    let d = shape.d() as i64;
    let norm = 1.0 / (shape.dim() as f64).sqrt();
    Ok(StateVector::new(
        (0..shape.dim())
            .map(|i| omega(d, j.dot(&shape.digits_at(i)) as i128) * norm)
            .collect(),
    ))
}

/// `|P_G; j> = F_G |X; j>`, with entries `omega_{d^n}(j k)/sqrt(d^n)`.
pub fn global_momentum_state(shape: &SystemShape, label: impl Into<Label>) -> Result<StateVector> {
    let j = label.into().global(shape)?.value() as i128;
    let m = shape.dim() as i64;
    let norm = 1.0 / (shape.dim() as f64).sqrt();
    Ok(StateVector::new(
        shape
            .global_labels()
            .map(|k| omega(m, j * k.value() as i128) * norm)
            .collect(),
    ))
}

pub fn basis_state(shape: &SystemShape, kind: BasisKind, label: impl Into<Label>) -> Result<StateVector> {
    match kind {
        BasisKind::Position => position_state(shape, label),
        BasisKind::LocalMomentum => local_momentum_state(shape, label),
        BasisKind::GlobalMomentum => global_momentum_state(shape, label),
    }
}

/// All states of one family, in basis order.
pub fn basis_states(shape: &SystemShape, kind: BasisKind) -> Result<Vec<StateVector>> {
    shape.global_labels().map(|j| basis_state(shape, kind, j)).collect()
}

/// `<v| m |v>` for every member `v` of a basis family, in basis order.
pub fn diagonal_in_basis(
    m: &crate::linalg::ComplexMatrix,
    shape: &SystemShape,
    kind: BasisKind,
) -> Result<Vec<Complex64>> {
    if m.rows() != shape.dim() || m.cols() != shape.dim() {
        return Err(QpsError::DimensionMismatch {
            expected: shape.dim(),
            found: m.rows(),
        });
    }
    if kind == BasisKind::Position {
        return Ok(m.diagonal());
    }
    basis_states(shape, kind)?.iter().map(|v| m.sandwich(v, v)).collect()
}
