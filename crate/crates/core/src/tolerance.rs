//! Numerical tolerances shared by constructors, checks and tests.

/// Hermiticity, unit trace, unitarity and other construction-time checks.
pub const CONSTRUCTION: f64 = 1e-10;

/// Residuals of spectral decompositions and identities derived from them.
pub const SPECTRAL: f64 = 1e-9;

/// Agreement with four-decimal reference tables.
pub const GOLDEN: f64 = 5e-4;

/// Lowest eigenvalue accepted for a positive semidefinite matrix.
pub const PSD_FLOOR: f64 = -1e-9;

/// Largest imaginary residue discarded when a value is known to be real.
pub const IMAG_RESIDUE: f64 = 1e-9;

/// Norm slack accepted (and corrected) when building a pure state.
pub const NORMALIZATION: f64 = 1e-8;

/// Unitarity and `A^4 = 1` preconditions of the numeric equivalence check.
pub const ORDER_FOUR: f64 = 1e-8;

/// Largest distance of an eigenphase from the nearest multiple of pi/2.
pub const EIGENPHASE: f64 = 1e-6;

/// Frobenius-norm and trace-power agreement in the equivalence check.
pub const EQUIVALENCE: f64 = 1e-6;

/// Magnitudes below this are written as `0` in text output.
pub const DISPLAY_FLOOR: f64 = 5e-13;
