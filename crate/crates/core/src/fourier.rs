//! Single-qudit, local and global finite Fourier transforms.
//!
//! `F_L = F x .. x F` acts componentwise on `[Z(d)]^n`; `F_G` is the Fourier
//! transform of `Z(d^n)`. Both are order-4 unitaries with the same square
//! (the parity matrix), but their traces, and hence their spectra, can differ.
//! [`classify_equivalence`] decides unitary equivalence in closed form and
//! [`numeric_equivalence_check`] decides it from eigenvalue multiplicities.

use std::fmt;

use num_complex::Complex64;

use crate::error::{QpsError, Result};
use crate::linalg::{hermitian_eig, trace_product, ComplexMatrix};
use crate::ring::{omega, SystemShape};
use crate::tolerance;

/// The two ways of Fourier-transforming an n-partite system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FourierKind {
    Local,
    Global,
}

/// An element of `{1, i, -1, -i}`, stored as a number of quarter turns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FourthRoot(u8);

impl FourthRoot {
    pub const ONE: FourthRoot = FourthRoot(0);
    pub const I: FourthRoot = FourthRoot(1);
    pub const MINUS_ONE: FourthRoot = FourthRoot(2);
    pub const MINUS_I: FourthRoot = FourthRoot(3);

    pub fn from_quarter_turns(k: u64) -> Self {
        FourthRoot((k % 4) as u8)
    }

    pub fn quarter_turns(self) -> u8 {
        self.0
    }

    pub fn pow(self, e: u64) -> Self {
        FourthRoot::from_quarter_turns(self.0 as u64 * (e % 4))
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

impl fmt::Display for FourthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.0 as usize])
    }
}

fn check_odd(d: usize) -> Result<()> {
    if d.is_multiple_of(2) {
        return Err(QpsError::InvalidDimension(d));
    }
    Ok(())
}

/// `F[j,k] = omega_d(jk)/sqrt(d)` over the centered period, ascending.
pub fn fourier_matrix(d: usize) -> Result<ComplexMatrix> {
    check_odd(d)?;
    let m = d as i64;
    let h = (m - 1) / 2;
    let norm = 1.0 / (d as f64).sqrt();
    Ok(ComplexMatrix::from_fn(d, d, |r, c| {
        let (j, k) = (r as i64 - h, c as i64 - h);
        omega(m, (j * k) as i128) * norm
    }))
}

/// `F x .. x F` (n factors).
pub fn local_fourier(shape: &SystemShape) -> Result<ComplexMatrix> {
    let f = fourier_matrix(shape.d())?;
    let mut out = f.clone();
    for _ in 1..shape.n() {
        out = out.kron(&f);
    }
    Ok(out)
}

/// `F_G[j,k] = omega_{d^n}(jk)/sqrt(d^n)` over global labels.
pub fn global_fourier(shape: &SystemShape) -> Result<ComplexMatrix> {
    let m = shape.dim_i64();
    let h = shape.half_dim();
    let norm = 1.0 / (shape.dim() as f64).sqrt();
    Ok(ComplexMatrix::from_fn(shape.dim(), shape.dim(), |r, c| {
        let (j, k) = (r as i64 - h, c as i64 - h);
        omega(m, j as i128 * k as i128) * norm
    }))
}

pub fn fourier(shape: &SystemShape, kind: FourierKind) -> Result<ComplexMatrix> {
    match kind {
        FourierKind::Local => local_fourier(shape),
        FourierKind::Global => global_fourier(shape),
    }
}

/// The permutation `|j> -> |-j>`, anti-diagonal in the centered basis.
pub fn parity_matrix(shape: &SystemShape) -> ComplexMatrix {
    let dim = shape.dim();
    ComplexMatrix::from_fn(dim, dim, |r, c| {
        if r + c == dim - 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Gauss-sum trace of the single Fourier matrix of odd dimension `m`.
fn single_trace(m_mod_4: u64) -> FourthRoot {
    if m_mod_4 == 1 {
        FourthRoot::ONE
    } else {
        FourthRoot::I
    }
}

/// Closed-form trace of `F_L` or `F_G` as a fourth root of unity.
pub fn predicted_trace_root(d: usize, n: usize, kind: FourierKind) -> Result<FourthRoot> {
    check_odd(d)?;
    let d4 = (d % 4) as u64;
    Ok(match kind {
        FourierKind::Local => single_trace(d4).pow(n as u64),
        FourierKind::Global => {
            // d^n mod 4 is 1 unless d = 3 mod 4 and n is odd
            let dim4 = if d4 == 3 && n % 2 == 1 { 3 } else { 1 };
            single_trace(dim4)
        }
    })
}

pub fn predicted_trace(d: usize, n: usize, kind: FourierKind) -> Result<Complex64> {
    predicted_trace_root(d, n, kind).map(FourthRoot::to_complex)
}

/// Trace of `F_L` or `F_G` summed from its diagonal, without building the matrix.
pub fn computed_trace(shape: &SystemShape, kind: FourierKind) -> Complex64 {
    let dim = shape.dim();
    let norm = 1.0 / (dim as f64).sqrt();
    let sum: Complex64 = match kind {
        FourierKind::Local => {
            let d = shape.d_i64();
            (0..dim)
                .map(|i| {
                    let j = shape.digits_at(i);
                    omega(d, j.dot(&j) as i128)
                })
                .sum()
        }
        FourierKind::Global => {
            let m = shape.dim_i64();
            shape
                .global_labels()
                .map(|j| omega(m, j.value() as i128 * j.value() as i128))
                .sum()
        }
    };
    sum * norm
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equivalent,
    Inequivalent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equivalent => "Equivalent",
            Verdict::Inequivalent => "Inequivalent",
        })
    }
}

/// Case of the classification that decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquivalenceBranch {
    /// `d = 4m+1`: equivalent for every n.
    DOneModFour,
    /// `d = 4m+3` with `n mod 4` given by the payload.
    DThreeModFour(u8),
}

impl EquivalenceBranch {
    pub fn verdict(self) -> Verdict {
        match self {
            EquivalenceBranch::DOneModFour | EquivalenceBranch::DThreeModFour(0 | 1) => Verdict::Equivalent,
            EquivalenceBranch::DThreeModFour(_) => Verdict::Inequivalent,
        }
    }
}

impl fmt::Display for EquivalenceBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceBranch::DOneModFour => f.write_str("d=4m+1"),
            EquivalenceBranch::DThreeModFour(0) => f.write_str("d=4m+3, n=4N"),
            EquivalenceBranch::DThreeModFour(r) => write!(f, "d=4m+3, n=4N+{r}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceVerdict {
    pub verdict: Verdict,
    pub trace_fl: FourthRoot,
    pub trace_fg: FourthRoot,
    pub branch: EquivalenceBranch,
}

impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}); Tr F_L = {}, Tr F_G = {}",
            self.verdict, self.branch, self.trace_fl, self.trace_fg
        )
    }
}

/// Closed-form decision of whether `F_L` and `F_G` are unitarily equivalent.
pub fn classify_equivalence(d: usize, n: usize) -> Result<EquivalenceVerdict> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(QpsError::InvalidDimension(d));
    }
    if n == 0 {
        return Err(QpsError::NoComponents);
    }
    let branch = if d % 4 == 1 {
        EquivalenceBranch::DOneModFour
    } else {
        EquivalenceBranch::DThreeModFour((n % 4) as u8)
    };
    let trace_fl = predicted_trace_root(d, n, FourierKind::Local)?;
    let trace_fg = predicted_trace_root(d, n, FourierKind::Global)?;
    Ok(EquivalenceVerdict {
        verdict: branch.verdict(),
        trace_fl,
        trace_fg,
        branch,
    })
}

/// Eigenspaces of an order-4 unitary grouped by eigenvalue `i^k`.
#[derive(Debug, Clone)]
pub struct QuarterEigenspaces {
    /// Multiplicities of the eigenvalues `1, i, -1, -i`.
    pub multiplicities: [usize; 4],
    /// Orthonormal eigenvectors as columns, grouped by eigenvalue in the same order.
    pub vectors: ComplexMatrix,
}

fn check_order_four(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(QpsError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let dev = a.unitary_deviation();
    if dev > tolerance::ORDER_FOUR {
        return Err(QpsError::NotUnitary(dev));
    }
    let a2 = a * a;
    let dev = (&a2 * &a2).max_abs_diff(&ComplexMatrix::identity(a.rows()));
    if dev > tolerance::ORDER_FOUR {
        return Err(QpsError::NotOrderFour(dev));
    }
    Ok(a2)
}

/// Split an order-4 unitary into its four eigenspaces.
///
/// The Hermitian matrix `Re A + 2 Im A` has eigenvalues `1, 2, -1, -2` on the
/// eigenspaces of `1, i, -1, -i`, so one Hermitian eigendecomposition yields
/// eigenvectors of `A`. Each eigenphase is then read off a Rayleigh quotient.
pub fn quarter_eigenspaces(a: &ComplexMatrix) -> Result<QuarterEigenspaces> {
    check_order_four(a)?;
    quarter_eigenspaces_unchecked(a)
}

fn quarter_eigenspaces_unchecked(a: &ComplexMatrix) -> Result<QuarterEigenspaces> {
    let n = a.rows();
    let ad = a.dagger();
    let re = (a + &ad).scale_real(0.5);
    let im = (a - &ad).scale(Complex64::new(0.0, -0.5));
    let h = &re + &im.scale_real(2.0);
    // symmetrize away rounding before the Hermitian check
    let h = (&h + &h.dagger()).scale_real(0.5);
    let eig = hermitian_eig(&h)?;
    let av = a * &eig.vectors;
    let quarter = std::f64::consts::FRAC_PI_2;
    let mut classes = Vec::with_capacity(n);
    for c in 0..n {
        let rayleigh: Complex64 = (0..n).map(|r| eig.vectors[(r, c)].conj() * av[(r, c)]).sum();
        let phase = rayleigh.arg();
        let turns = (phase / quarter).round();
        let off = (phase - turns * quarter).abs();
        if off > tolerance::EIGENPHASE {
            return Err(QpsError::EigenphaseOffGrid(off));
        }
        classes.push((turns as i64).rem_euclid(4) as usize);
    }
    let mut multiplicities = [0usize; 4];
    for &k in &classes {
        multiplicities[k] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| classes[c]);
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| eig.vectors[(r, order[c])]);
    Ok(QuarterEigenspaces {
        multiplicities,
        vectors,
    })
}

/// Multiplicities of `1, i, -1, -i` in the spectrum of an order-4 unitary.
pub fn eigen_multiplicities(a: &ComplexMatrix) -> Result<[usize; 4]> {
    quarter_eigenspaces(a).map(|q| q.multiplicities)
}

/// Trace implied by a multiplicity vector: `m_1 + i m_i - m_{-1} - i m_{-i}`.
pub fn trace_from_multiplicities(m: &[usize; 4]) -> Complex64 {
    Complex64::new(m[0] as f64 - m[2] as f64, m[1] as f64 - m[3] as f64)
}

/// Details behind [`numeric_equivalence_check`].
#[derive(Debug, Clone)]
pub struct NumericEquivalence {
    pub norm_a: f64,
    pub norm_b: f64,
    pub multiplicities_a: [usize; 4],
    pub multiplicities_b: [usize; 4],
    /// `Tr A^k` for `k = 1..4`.
    pub trace_powers_a: [Complex64; 4],
    pub trace_powers_b: [Complex64; 4],
    pub equivalent: bool,
    /// Whether the trace-power cross-check agrees with `equivalent`.
    pub trace_powers_agree: bool,
    eigenspaces: Option<(ComplexMatrix, ComplexMatrix)>,
}

impl NumericEquivalence {
    /// A unitary `U` with `B = U A U^dagger`, when the two are equivalent.
    ///
    /// Eigenbases are paired class by class; any such pairing works and none
    /// is canonical.
    pub fn intertwiner(&self) -> Option<ComplexMatrix> {
        let (va, vb) = self.eigenspaces.as_ref()?;
        self.equivalent.then(|| vb * &va.dagger())
    }
}

fn trace_powers(a: &ComplexMatrix, a2: &ComplexMatrix) -> Result<[Complex64; 4]> {
    Ok([a.trace()?, a2.trace()?, trace_product(a2, a)?, trace_product(a2, a2)?])
}

/// Full report of the numeric equivalence test for two order-4 unitaries.
pub fn numeric_equivalence(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<NumericEquivalence> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(QpsError::DimensionMismatch {
            expected: a.rows(),
            found: b.rows(),
        });
    }
    let a2 = check_order_four(a)?;
    let b2 = check_order_four(b)?;
    let qa = quarter_eigenspaces_unchecked(a)?;
    let qb = quarter_eigenspaces_unchecked(b)?;
    let norm_a = a.frobenius_norm();
    let norm_b = b.frobenius_norm();
    let norms_agree = (norm_a - norm_b).abs() <= tolerance::EQUIVALENCE;
    let equivalent = norms_agree && qa.multiplicities == qb.multiplicities;
    let trace_powers_a = trace_powers(a, &a2)?;
    let trace_powers_b = trace_powers(b, &b2)?;
    let by_traces = norms_agree
        && trace_powers_a
            .iter()
            .zip(&trace_powers_b)
            .all(|(x, y)| (x - y).norm() <= tolerance::EQUIVALENCE);
    Ok(NumericEquivalence {
        norm_a,
        norm_b,
        multiplicities_a: qa.multiplicities,
        multiplicities_b: qb.multiplicities,
        trace_powers_a,
        trace_powers_b,
        equivalent,
        trace_powers_agree: by_traces == equivalent,
        eigenspaces: Some((qa.vectors, qb.vectors)),
    })
}

/// Whether two order-4 unitaries are unitarily equivalent.
pub fn numeric_equivalence_check(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<bool> {
    numeric_equivalence(a, b).map(|r| r.equivalent)
}
