//! Local and global finite phase space for n-partite qudit systems of odd
//! dimension `d`.
//!
//! The Hilbert space of `n` qudits has dimension `d^n`. Its position basis is
//! labelled either by a digit vector `(j_0, .., j_{n-1})` over `Z(d)` (the
//! local view) or by a single residue over `Z(d^n)` (the global view). Both
//! views come with their own Fourier transform, displacement operators,
//! Wigner and Weyl functions; this crate builds all of them as dense matrices
//! and tables.
//!
//! Basis position `i` carries the global label `i - (d^n - 1)/2`, so labels
//! run in ascending centered order and component 0 is the fastest-varying
//! digit.

pub mod basis;
pub mod density;
pub mod displacement;
pub mod dynamics;
pub mod error;
pub mod fast_dft;
pub mod fourier;
pub mod io;
pub mod linalg;
pub mod phase_space;
pub mod presets;
pub mod ring;
pub mod tolerance;

pub use error::{QpsError, Result};
pub use linalg::{ComplexMatrix, StateVector};
pub use num_complex::Complex64;
pub use ring::{DigitVector, GlobalIndex, SystemShape};
