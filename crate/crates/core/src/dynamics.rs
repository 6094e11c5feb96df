//! Position and momentum observables, Hamiltonians and time evolution.
//!
//! Position operators are diagonal with the centered labels as eigenvalues;
//! momentum operators are their Fourier conjugates `-F^dagger X F`.

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{QpsError, Result};
use crate::fourier::{fourier_matrix, global_fourier};
use crate::linalg::{tensor_product, unitary_exponential, ComplexMatrix, StateVector};
use crate::ring::SystemShape;
use crate::tolerance;

/// A Hermitian operator together with the system it acts on.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableMatrix {
    matrix: ComplexMatrix,
    shape: SystemShape,
    description: String,
}

impl ObservableMatrix {
    pub fn new(shape: SystemShape, matrix: ComplexMatrix, description: impl Into<String>) -> Result<Self> {
        if matrix.rows() != shape.dim() || matrix.cols() != shape.dim() {
            return Err(QpsError::DimensionMismatch {
                expected: shape.dim(),
                found: matrix.rows(),
            });
        }
        let dev = matrix.hermitian_deviation();
        if dev > tolerance::CONSTRUCTION {
            return Err(QpsError::NotHermitian(dev));
        }
        Ok(ObservableMatrix {
            matrix,
            shape,
            description: description.into(),
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

fn centered_diagonal(dim: usize) -> ComplexMatrix {
    let h = (dim as f64 - 1.0) / 2.0;
    let diag: Vec<f64> = (0..dim).map(|i| i as f64 - h).collect();
    ComplexMatrix::from_real_diagonal(&diag)
}

/// Hermitian part, to strip rounding asymmetry from products like `F^dagger X F`.
fn hermitize(m: &ComplexMatrix) -> ComplexMatrix {
    (m + &m.dagger()).scale_real(0.5)
}

/// `X = sum_j j |X;j><X;j|` on one qudit.
pub fn position_operator(d: usize) -> Result<ObservableMatrix> {
    let shape = SystemShape::single(d)?;
    ObservableMatrix::new(shape, centered_diagonal(d), "X")
}

/// `P = -F^dagger X F` on one qudit.
pub fn momentum_operator(d: usize) -> Result<ObservableMatrix> {
    let shape = SystemShape::single(d)?;
    let f = fourier_matrix(d)?;
    let p = (&(&f.dagger() * &centered_diagonal(d)) * &f).scale_real(-1.0);
    ObservableMatrix::new(shape, hermitize(&p), "P")
}

/// `X_G = sum_j j |X;j><X;j|` over global labels.
pub fn global_position(shape: &SystemShape) -> Result<ObservableMatrix> {
    ObservableMatrix::new(*shape, centered_diagonal(shape.dim()), "XG")
}

/// `P_G = -F_G^dagger X_G F_G`.
pub fn global_momentum(shape: &SystemShape) -> Result<ObservableMatrix> {
    let f = global_fourier(shape)?;
    let p = (&(&f.dagger() * &centered_diagonal(shape.dim())) * &f).scale_real(-1.0);
    ObservableMatrix::new(*shape, hermitize(&p), "PG")
}

/// `single` acting on component `r`, identity elsewhere.
pub fn local_observable(shape: &SystemShape, single: &ObservableMatrix, r: usize) -> Result<ObservableMatrix> {
    let mut factors = vec![None; shape.n()];
    *factors
        .get_mut(r)
        .ok_or(QpsError::ComponentOutOfRange { index: r, n: shape.n() })? = Some(single);
    let desc = format!("{}@{}", single.description(), r);
    product_observable(shape, &factors).map(|o| ObservableMatrix { description: desc, ..o })
}

/// Tensor product with `factors[r]` on component `r`; `None` stands for identity.
pub fn product_observable(shape: &SystemShape, factors: &[Option<&ObservableMatrix>]) -> Result<ObservableMatrix> {
    if factors.len() != shape.n() {
        return Err(QpsError::DimensionMismatch {
            expected: shape.n(),
            found: factors.len(),
        });
    }
    let d = shape.d();
    let mut mats = Vec::with_capacity(shape.n());
    let mut desc = Vec::with_capacity(shape.n());
    for f in factors {
        match f {
            Some(o) => {
                if o.matrix().rows() != d {
                    return Err(QpsError::DimensionMismatch {
                        expected: d,
                        found: o.matrix().rows(),
                    });
                }
                mats.push(o.matrix().clone());
                desc.push(o.description().to_string());
            }
            None => {
                mats.push(ComplexMatrix::identity(d));
                desc.push("1".into());
            }
        }
    }
    ObservableMatrix::new(*shape, tensor_product(&mats), desc.join("x"))
}

/// `exp(i t H) s`.
pub fn evolve(h: &ObservableMatrix, t: f64, s: &StateVector) -> Result<StateVector> {
    if s.dim() != h.shape().dim() {
        return Err(QpsError::DimensionMismatch {
            expected: h.shape().dim(),
            found: s.dim(),
        });
    }
    unitary_exponential(h.matrix(), t)?.apply(s)
}

/// `Tr(rho O)`, real for Hermitian `O`.
pub fn expectation(rho: &DensityMatrix, o: &ObservableMatrix) -> Result<f64> {
    if rho.shape().dim() != o.shape().dim() {
        return Err(QpsError::DimensionMismatch {
            expected: o.shape().dim(),
            found: rho.shape().dim(),
        });
    }
    let v: Complex64 = crate::linalg::trace_product(rho.matrix(), o.matrix())?;
    if v.im.abs() > tolerance::IMAG_RESIDUE {
        return Err(QpsError::NotHermitian(v.im.abs()));
    }
    Ok(v.re)
}
