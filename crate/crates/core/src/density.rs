//! Density matrices, reduced matrices and the correlator `rho - r(rho)`.

use num_complex::Complex64;

use crate::basis::{diagonal_in_basis, BasisKind};
use crate::error::{QpsError, Result};
use crate::linalg::{hermitian_eigenvalues, partial_trace, tensor_product, ComplexMatrix, StateVector};
use crate::ring::SystemShape;
use crate::tolerance;

/// A Hermitian, unit-trace, positive semidefinite matrix on `d^n` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    shape: SystemShape,
}

impl DensityMatrix {
    /// Validates the matrix; the error names the violated invariant.
    pub fn new(shape: SystemShape, matrix: ComplexMatrix) -> Result<Self> {
        if matrix.rows() != shape.dim() || matrix.cols() != shape.dim() {
            return Err(QpsError::DimensionMismatch {
                expected: shape.dim(),
                found: if matrix.rows() != shape.dim() {
                    matrix.rows()
                } else {
                    matrix.cols()
                },
            });
        }
        let dev = matrix.hermitian_deviation();
        if dev > tolerance::CONSTRUCTION {
            return Err(QpsError::InvalidDensity(format!(
                "not Hermitian (max deviation {dev:.3e})"
            )));
        }
        let tr = matrix.trace()?;
        if (tr - Complex64::new(1.0, 0.0)).norm() > tolerance::CONSTRUCTION {
            return Err(QpsError::InvalidDensity(format!(
                "trace is {:.6} {:+.6}i, not 1",
                tr.re, tr.im
            )));
        }
        let lowest = hermitian_eigenvalues(&matrix)?[0];
        if lowest < tolerance::PSD_FLOOR {
            return Err(QpsError::InvalidDensity(format!(
                "not positive semidefinite (lowest eigenvalue {lowest:.3e})"
            )));
        }
        Ok(DensityMatrix { matrix, shape })
    }

    /// Wraps a matrix known to satisfy the invariants by construction.
    pub(crate) fn trusted(shape: SystemShape, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), shape.dim());
        DensityMatrix { matrix, shape }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }
}

/// `|s><s|`. Norms within tolerance of 1 are corrected; others are rejected.
pub fn pure_density(shape: &SystemShape, s: &StateVector) -> Result<DensityMatrix> {
    if s.dim() != shape.dim() {
        return Err(QpsError::DimensionMismatch {
            expected: shape.dim(),
            found: s.dim(),
        });
    }
    let norm = s.norm();
    if norm == 0.0 {
        return Err(QpsError::InvalidState("zero vector".into()));
    }
    if (norm - 1.0).abs() > tolerance::NORMALIZATION {
        return Err(QpsError::InvalidState(format!("norm is {norm:.9}, expected 1")));
    }
    let s = s.normalized()?;
    Ok(DensityMatrix::trusted(*shape, ComplexMatrix::outer(&s, &s)))
}

/// `1/d^n` times the identity.
pub fn maximally_mixed(shape: &SystemShape) -> DensityMatrix {
    DensityMatrix::trusted(
        *shape,
        ComplexMatrix::identity(shape.dim()).scale_real(1.0 / shape.dim() as f64),
    )
}

/// A position-diagonal density from probabilities in basis order.
pub fn diagonal_density(shape: &SystemShape, probabilities: &[f64]) -> Result<DensityMatrix> {
    if probabilities.len() != shape.dim() {
        return Err(QpsError::DimensionMismatch {
            expected: shape.dim(),
            found: probabilities.len(),
        });
    }
    DensityMatrix::new(*shape, ComplexMatrix::from_real_diagonal(probabilities))
}

/// `Tr_{i != r} rho` as a single-qudit density.
pub fn reduced_density(rho: &DensityMatrix, r: usize) -> Result<DensityMatrix> {
    let reduced = partial_trace(rho.matrix(), rho.shape(), r)?;
    Ok(DensityMatrix::trusted(SystemShape::single(rho.shape().d())?, reduced))
}

/// `rho_0 x .. x rho_{n-1}`, the product of all reduced densities.
pub fn factorized_approximant(rho: &DensityMatrix) -> Result<DensityMatrix> {
    let factors = (0..rho.shape().n())
        .map(|r| reduced_density(rho, r).map(DensityMatrix::into_matrix))
        .collect::<Result<Vec<_>>>()?;
    Ok(DensityMatrix::trusted(*rho.shape(), tensor_product(&factors)))
}

/// `rho - r(rho)`: Hermitian, traceless, zero for product states.
pub fn correlator(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    Ok(rho.matrix() - factorized_approximant(rho)?.matrix())
}

/// Diagonal elements of the correlator in the three basis families.
///
/// Every table is indexed by basis position, i.e. ascending global label.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelatorDiagonals {
    pub shape: SystemShape,
    pub position: Vec<f64>,
    pub local_momentum: Vec<f64>,
    pub global_momentum: Vec<f64>,
}

fn real_parts(values: Vec<Complex64>) -> Result<Vec<f64>> {
    values
        .into_iter()
        .map(|z| {
            if z.im.abs() > tolerance::IMAG_RESIDUE {
                Err(QpsError::InvalidDensity(format!(
                    "diagonal element has imaginary part {:.3e}",
                    z.im
                )))
            } else {
                Ok(z.re)
            }
        })
        .collect()
}

pub fn correlator_diagonals(rho: &DensityMatrix) -> Result<CorrelatorDiagonals> {
    let c = correlator(rho)?;
    let shape = *rho.shape();
    Ok(CorrelatorDiagonals {
        shape,
        position: real_parts(diagonal_in_basis(&c, &shape, BasisKind::Position)?)?,
        local_momentum: real_parts(diagonal_in_basis(&c, &shape, BasisKind::LocalMomentum)?)?,
        global_momentum: real_parts(diagonal_in_basis(&c, &shape, BasisKind::GlobalMomentum)?)?,
    })
}

/// Rearranges a two-component table: `grid[a][b]` is the value at digits `(a, b)`,
/// both ascending over the centered period of `d`.
pub fn digit_grid(shape: &SystemShape, values: &[f64]) -> Result<Vec<Vec<f64>>> {
    if shape.n() != 2 {
        return Err(QpsError::UnsupportedComponents {
            expected: 2,
            found: shape.n(),
        });
    }
    if values.len() != shape.dim() {
        return Err(QpsError::DimensionMismatch {
            expected: shape.dim(),
            found: values.len(),
        });
    }
    let d = shape.d();
    // basis position is a + d b with a the fast digit
    Ok((0..d).map(|a| (0..d).map(|b| values[a + d * b]).collect()).collect())
}
