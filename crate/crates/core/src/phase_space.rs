//! Wigner, Weyl and correlation tables in the local and global formalisms.
//!
//! A table is a `d^n x d^n` grid. Rows carry the first phase-space coordinate
//! (`gamma` for Wigner-type tables, `alpha` for Weyl-type ones) and columns
//! the second (`delta` or `beta`), both in ascending global-label order. In
//! the local formalism the point at row label `a` and column label `b` is the
//! 2n-tuple made of the digits of `a` and `b`.

use std::fmt;

use num_complex::Complex64;

use crate::basis::{diagonal_in_basis, BasisKind};
use crate::density::{correlator_diagonals, factorized_approximant, DensityMatrix};
use crate::displacement::{
    displacement_global_op, displacement_local_op, parity_global_op, parity_local_op, GlobalPhasePoint,
    LocalPhasePoint, MonomialOperator,
};
use crate::error::{QpsError, Result};
use crate::linalg::ComplexMatrix;
use crate::ring::{omega, SystemShape};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formalism {
    Local,
    Global,
}

impl fmt::Display for Formalism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formalism::Local => "local",
            Formalism::Global => "global",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// `Tr(rho P(gamma, delta))`.
    Wigner,
    /// `Tr(rho D(alpha, beta))`.
    Weyl,
    /// Wigner function of `rho` minus that of `r(rho)`.
    R,
    /// Weyl function of `rho` minus that of `r(rho)`.
    RTilde,
    /// Wigner-type table of the off-diagonal part of `rho`.
    A,
}

impl TableKind {
    /// Whether values are real (traces against Hermitian parity operators).
    pub fn is_real(self) -> bool {
        matches!(self, TableKind::Wigner | TableKind::R | TableKind::A)
    }

    /// Name of the row and column coordinates.
    pub fn axis_names(self) -> (&'static str, &'static str) {
        if self.is_real() {
            ("gamma", "delta")
        } else {
            ("alpha", "beta")
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Wigner => "wigner",
            TableKind::Weyl => "weyl",
            TableKind::R => "r",
            TableKind::RTilde => "rtilde",
            TableKind::A => "a",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpaceTable {
    pub formalism: Formalism,
    pub kind: TableKind,
    pub shape: SystemShape,
    values: Vec<Complex64>,
}

impl PhaseSpaceTable {
    fn from_values(formalism: Formalism, kind: TableKind, shape: SystemShape, values: Vec<Complex64>) -> Result<Self> {
        let values = if kind.is_real() {
            values
                .into_iter()
                .map(|z| {
                    if z.im.abs() > tolerance::IMAG_RESIDUE {
                        Err(QpsError::InvalidDensity(format!(
                            "{kind} table has imaginary residue {:.3e}",
                            z.im
                        )))
                    } else {
                        Ok(Complex64::new(z.re, 0.0))
                    }
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            values
        };
        Ok(PhaseSpaceTable {
            formalism,
            kind,
            shape,
            values,
        })
    }

    pub fn size(&self) -> usize {
        self.shape.dim()
    }

    /// Value at basis positions `(row, col)`.
    pub fn value(&self, row: usize, col: usize) -> Complex64 {
        self.values[row * self.size() + col]
    }

    /// Value at global labels `(row, col)`.
    pub fn at(&self, row: i64, col: i64) -> Result<Complex64> {
        let r = self.shape.index_of(self.shape.global_checked(row)?);
        let c = self.shape.index_of(self.shape.global_checked(col)?);
        Ok(self.value(r, c))
    }

    /// Value at a local point given by its digit tuples.
    pub fn at_digits(&self, row: &[i64], col: &[i64]) -> Result<Complex64> {
        let r = self.shape.index_of_digits(&self.shape.digits(row)?)?;
        let c = self.shape.index_of_digits(&self.shape.digits(col)?)?;
        Ok(self.value(r, c))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Rows of real parts.
    pub fn real_rows(&self) -> Vec<Vec<f64>> {
        self.values
            .chunks(self.size())
            .map(|row| row.iter().map(|z| z.re).collect())
            .collect()
    }

    /// `(1/d^n) sum_row T(row, col)` for each column.
    pub fn column_means(&self) -> Vec<Complex64> {
        let n = self.size();
        (0..n)
            .map(|c| (0..n).map(|r| self.value(r, c)).sum::<Complex64>() / n as f64)
            .collect()
    }

    /// `(1/d^n) sum_col T(row, col)` for each row.
    pub fn row_means(&self) -> Vec<Complex64> {
        let n = self.size();
        (0..n)
            .map(|r| self.values[r * n..(r + 1) * n].iter().sum::<Complex64>() / n as f64)
            .collect()
    }

    pub fn total(&self) -> Complex64 {
        self.values.iter().sum()
    }

    pub fn max_abs_diff(&self, other: &PhaseSpaceTable) -> f64 {
        if self.values.len() != other.values.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise difference, keeping this table's kind.
    fn minus(&self, other: &PhaseSpaceTable, kind: TableKind) -> Result<PhaseSpaceTable> {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        PhaseSpaceTable::from_values(self.formalism, kind, self.shape, values)
    }
}

fn operator_at(
    shape: &SystemShape,
    formalism: Formalism,
    parity: bool,
    r: usize,
    c: usize,
) -> Result<MonomialOperator> {
    let (a, b) = (shape.label_at(r), shape.label_at(c));
    match (formalism, parity) {
        (Formalism::Local, true) => parity_local_op(shape, &LocalPhasePoint::from_globals(shape, a, b)),
        (Formalism::Local, false) => displacement_local_op(shape, &LocalPhasePoint::from_globals(shape, a, b)),
        (Formalism::Global, true) => parity_global_op(shape, &GlobalPhasePoint { alpha: a, beta: b }),
        (Formalism::Global, false) => displacement_global_op(shape, &GlobalPhasePoint { alpha: a, beta: b }),
    }
}

fn trace_table(
    m: &ComplexMatrix,
    shape: &SystemShape,
    formalism: Formalism,
    parity: bool,
    kind: TableKind,
) -> Result<PhaseSpaceTable> {
    let n = shape.dim();
    let mut values = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            values.push(operator_at(shape, formalism, parity, r, c)?.trace_against(m)?);
        }
    }
    PhaseSpaceTable::from_values(formalism, kind, *shape, values)
}

/// `W(gamma, delta) = Tr(rho P(gamma, delta))`.
pub fn wigner(rho: &DensityMatrix, formalism: Formalism) -> Result<PhaseSpaceTable> {
    trace_table(rho.matrix(), rho.shape(), formalism, true, TableKind::Wigner)
}

/// `W~(alpha, beta) = Tr(rho D(alpha, beta))`.
pub fn weyl(rho: &DensityMatrix, formalism: Formalism) -> Result<PhaseSpaceTable> {
    trace_table(rho.matrix(), rho.shape(), formalism, false, TableKind::Weyl)
}

/// Symplectic phase `omega(sign (beta gamma - alpha delta))` between a Weyl
/// point `(alpha, beta)` and a Wigner point `(gamma, delta)`.
fn symplectic_kernel(
    shape: &SystemShape,
    formalism: Formalism,
    weyl_pt: (usize, usize),
    wig_pt: (usize, usize),
    sign: i128,
) -> Complex64 {
    match formalism {
        Formalism::Local => {
            let [a, b, g, dl] = [weyl_pt.0, weyl_pt.1, wig_pt.0, wig_pt.1].map(|i| shape.digits_at(i));
            omega(shape.d() as i64, sign * (b.dot(&g) - a.dot(&dl)) as i128)
        }
        Formalism::Global => {
            let [a, b, g, dl] = [weyl_pt.0, weyl_pt.1, wig_pt.0, wig_pt.1].map(|i| shape.label_at(i).value() as i128);
            omega(shape.dim() as i64, sign * (b * g - a * dl))
        }
    }
}

/// Maps Weyl-type tables to Wigner-type tables and back.
///
/// `W(g, d) = (1/d^n) sum W~(a, b) omega(b g - a d)` and the inverse with the
/// conjugate kernel. Weyl pairs with Wigner and R~ pairs with R.
pub fn wigner_weyl_transform(table: &PhaseSpaceTable) -> Result<PhaseSpaceTable> {
    let (target, sign) = match table.kind {
        TableKind::Weyl => (TableKind::Wigner, 1),
        TableKind::Wigner => (TableKind::Weyl, -1),
        TableKind::RTilde => (TableKind::R, 1),
        TableKind::R => (TableKind::RTilde, -1),
        TableKind::A => {
            return Err(QpsError::KindMismatch("the A table has no Weyl counterpart".into()));
        }
    };
    let shape = table.shape;
    let n = shape.dim();
    let mut values = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for sr in 0..n {
                for sc in 0..n {
                    let v = table.value(sr, sc);
                    if v == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let k = if sign == 1 {
                        symplectic_kernel(&shape, table.formalism, (sr, sc), (r, c), 1)
                    } else {
                        symplectic_kernel(&shape, table.formalism, (r, c), (sr, sc), -1)
                    };
                    acc += v * k;
                }
            }
            values.push(acc / n as f64);
        }
    }
    // real kinds may carry rounding residue from the sum
    let values = if target.is_real() {
        values
            .into_iter()
            .map(|z| {
                if z.im.abs() <= tolerance::SPECTRAL {
                    Complex64::new(z.re, 0.0)
                } else {
                    z
                }
            })
            .collect()
    } else {
        values
    };
    PhaseSpaceTable::from_values(table.formalism, target, shape, values)
}

/// Deviations of the Wigner marginals from the diagonal elements of `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginalReport {
    /// `max |(1/d^n) sum_gamma W(gamma, delta) - <X;delta|rho|X;delta>|`.
    pub position: f64,
    /// `max |(1/d^n) sum_delta W(gamma, delta) - <P;gamma|rho|P;gamma>|`.
    pub momentum: f64,
    /// `|(1/d^n) sum W - 1|`.
    pub total: f64,
}

impl MarginalReport {
    pub fn max(&self) -> f64 {
        self.position.max(self.momentum).max(self.total)
    }
}

fn momentum_basis(formalism: Formalism) -> BasisKind {
    match formalism {
        Formalism::Local => BasisKind::LocalMomentum,
        Formalism::Global => BasisKind::GlobalMomentum,
    }
}

fn max_deviation(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn marginals(table: &PhaseSpaceTable, rho: &DensityMatrix) -> Result<MarginalReport> {
    if table.kind != TableKind::Wigner {
        return Err(QpsError::KindMismatch(format!(
            "marginals need a Wigner table, got {}",
            table.kind
        )));
    }
    if table.shape != *rho.shape() {
        return Err(QpsError::DimensionMismatch {
            expected: table.shape.dim(),
            found: rho.shape().dim(),
        });
    }
    let shape = table.shape;
    let position = diagonal_in_basis(rho.matrix(), &shape, BasisKind::Position)?;
    let momentum = diagonal_in_basis(rho.matrix(), &shape, momentum_basis(table.formalism))?;
    Ok(MarginalReport {
        position: max_deviation(&table.column_means(), &position),
        momentum: max_deviation(&table.row_means(), &momentum),
        total: (table.total() / shape.dim() as f64 - Complex64::new(1.0, 0.0)).norm(),
    })
}

/// `rho = sigma + tau` with `sigma` the position-diagonal part.
pub fn diag_offdiag_split(rho: &DensityMatrix) -> Result<(DensityMatrix, ComplexMatrix)> {
    let m = rho.matrix();
    let sigma = ComplexMatrix::from_diagonal(&m.diagonal());
    let tau = m - &sigma;
    Ok((DensityMatrix::new(*rho.shape(), sigma)?, tau))
}

/// Tables of the off-diagonal part `tau` in both formalisms.
#[derive(Debug, Clone)]
pub struct WignerDifference {
    pub a_local: PhaseSpaceTable,
    pub a_global: PhaseSpaceTable,
    /// `max |(W_L - W_G) - (A_L - A_G)|` over matched points.
    pub identity_residual: f64,
}

pub fn wigner_difference(rho: &DensityMatrix) -> Result<WignerDifference> {
    let (_, tau) = diag_offdiag_split(rho)?;
    let shape = rho.shape();
    let a_local = trace_table(&tau, shape, Formalism::Local, true, TableKind::A)?;
    let a_global = trace_table(&tau, shape, Formalism::Global, true, TableKind::A)?;
    let wl = wigner(rho, Formalism::Local)?;
    let wg = wigner(rho, Formalism::Global)?;
    let identity_residual = wl
        .values()
        .iter()
        .zip(wg.values())
        .zip(a_local.values().iter().zip(a_global.values()))
        .map(|((l, g), (al, ag))| ((l - g) - (al - ag)).norm())
        .fold(0.0, f64::max);
    Ok(WignerDifference {
        a_local,
        a_global,
        identity_residual,
    })
}

/// `(R, R~)`: Wigner and Weyl functions of `rho` minus those of `r(rho)`.
pub fn r_matrices(rho: &DensityMatrix, formalism: Formalism) -> Result<(PhaseSpaceTable, PhaseSpaceTable)> {
    let f = factorized_approximant(rho)?;
    let r = wigner(rho, formalism)?.minus(&wigner(&f, formalism)?, TableKind::R)?;
    let rt = weyl(rho, formalism)?.minus(&weyl(&f, formalism)?, TableKind::RTilde)?;
    Ok((r, rt))
}

/// Deviations of the R-table marginals from the correlator diagonals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RMarginalReport {
    /// Column means against the position table.
    pub position: f64,
    /// Row means against the local- or global-momentum table.
    pub momentum: f64,
    /// `|sum R|`.
    pub total: f64,
}

impl RMarginalReport {
    pub fn max(&self) -> f64 {
        self.position.max(self.momentum).max(self.total)
    }
}

pub fn r_marginals(r: &PhaseSpaceTable, rho: &DensityMatrix) -> Result<RMarginalReport> {
    if r.kind != TableKind::R {
        return Err(QpsError::KindMismatch(format!("expected an R table, got {}", r.kind)));
    }
    let c = correlator_diagonals(rho)?;
    let momentum = match r.formalism {
        Formalism::Local => &c.local_momentum,
        Formalism::Global => &c.global_momentum,
    };
    let as_complex = |v: &[f64]| v.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>();
    Ok(RMarginalReport {
        position: max_deviation(&r.column_means(), &as_complex(&c.position)),
        momentum: max_deviation(&r.row_means(), &as_complex(momentum)),
        total: r.total().norm(),
    })
}
