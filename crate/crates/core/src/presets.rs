//! Reference states and Hamiltonians for the two-qutrit scenarios.
//!
//! All presets live on `d = 3, n = 2`, where global labels run over
//! `-4..=4` and digit pairs `(a, b)` satisfy `label = a + 3 b`.

use num_complex::Complex64;

use crate::basis::{global_momentum_state, local_momentum_state, position_state};
use crate::density::{pure_density, DensityMatrix};
use crate::dynamics::{
    global_momentum, global_position, momentum_operator, position_operator, product_observable, ObservableMatrix,
};
use crate::linalg::{ComplexMatrix, StateVector};
use crate::ring::SystemShape;

pub fn two_qutrits() -> SystemShape {
    SystemShape::new(3, 2).expect("3^2 is within every cap")
}

/// `(1/sqrt 3)|X;3> + (1/2)|X;-2> + sqrt(5/12)|X;-1>`.
pub fn reference_state() -> StateVector {
    let s = two_qutrits();
    let mut v = StateVector::zeros(s.dim());
    v[s.index_of(s.global(3))] = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
    v[s.index_of(s.global(-2))] = Complex64::new(0.5, 0.0);
    v[s.index_of(s.global(-1))] = Complex64::new((5.0f64 / 12.0).sqrt(), 0.0);
    v
}

pub fn reference_density() -> DensityMatrix {
    pure_density(&two_qutrits(), &reference_state()).expect("unit-norm preset")
}

/// Product state with amplitudes `(-3, 2, 1)` on component 0 and `(-2i, 1, i)`
/// on component 1 over labels `(-1, 0, 1)`, normalized by `1/sqrt 84`.
pub fn evolution_state() -> StateVector {
    let a = [-3.0, 2.0, 1.0].map(|x| Complex64::new(x, 0.0));
    let b = [
        Complex64::new(0.0, -2.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
    ];
    let norm = 1.0 / 84f64.sqrt();
    StateVector::new((0..9).map(|i| a[i % 3] * b[i / 3] * norm).collect())
}

/// `|s><s|` for [`evolution_state`]; a product state with complex coherences.
pub fn product_density() -> DensityMatrix {
    pure_density(&two_qutrits(), &evolution_state()).expect("unit-norm preset")
}

/// `(P_G^2 + X_G^2)/2`.
pub fn hamiltonian_h1() -> ObservableMatrix {
    let s = two_qutrits();
    let xg = global_position(&s).expect("valid shape");
    let pg = global_momentum(&s).expect("valid shape");
    let h = (&(pg.matrix() * pg.matrix()) + &(xg.matrix() * xg.matrix())).scale_real(0.5);
    ObservableMatrix::new(s, hermitize(&h), "h1").expect("Hermitian by construction")
}

/// `(P^2 x 1 + X^2 x 1 + 1 x P^2 + 1 x X^2)/2 + X x X`.
pub fn hamiltonian_h2() -> ObservableMatrix {
    let s = two_qutrits();
    let x = position_operator(3).expect("odd d");
    let p = momentum_operator(3).expect("odd d");
    let square = |o: &ObservableMatrix, name: &str| {
        ObservableMatrix::new(*o.shape(), hermitize(&(o.matrix() * o.matrix())), name).expect("Hermitian")
    };
    let (x2, p2) = (square(&x, "X^2"), square(&p, "P^2"));
    let term = |f: [Option<&ObservableMatrix>; 2]| product_observable(&s, &f).expect("valid factors");
    let single = [
        term([Some(&p2), None]),
        term([Some(&x2), None]),
        term([None, Some(&p2)]),
        term([None, Some(&x2)]),
    ];
    let mut h = term([Some(&x), Some(&x)]).matrix().clone();
    for t in &single {
        h = &h + &t.matrix().scale_real(0.5);
    }
    ObservableMatrix::new(s, hermitize(&h), "h2").expect("Hermitian by construction")
}

/// `|P_G; j><P_G; j|`.
pub fn global_momentum_density(shape: &SystemShape, label: i64) -> crate::Result<DensityMatrix> {
    let v = global_momentum_state(shape, shape.global_checked(label)?)?;
    pure_density(shape, &v)
}

/// `|P_L; j><P_L; j|` with `j` given by its global label.
pub fn local_momentum_density(shape: &SystemShape, label: i64) -> crate::Result<DensityMatrix> {
    let v = local_momentum_state(shape, shape.global_checked(label)?)?;
    pure_density(shape, &v)
}

/// `|X; j><X; j|`.
pub fn position_density(shape: &SystemShape, label: i64) -> crate::Result<DensityMatrix> {
    let v = position_state(shape, shape.global_checked(label)?)?;
    pure_density(shape, &v)
}

fn hermitize(m: &ComplexMatrix) -> ComplexMatrix {
    (m + &m.dagger()).scale_real(0.5)
}
