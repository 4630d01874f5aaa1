//! Angle metric on pure states, Uhlmann fidelity and the probability
//! deviation inequalities that follow from them.
//!
//! Every `*_check` function returns an [`InequalityCheck`] holding both sides
//! of `lhs <= rhs` so that randomized suites can track the worst margin.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::hilbert::{
    inner_product, partial_trace, psd_support_factor, DensityOperator, Projector, StateVector,
    Subsystem,
};
use crate::{Error, Result};

/// Default tolerance for [`InequalityCheck::passed`].
pub const CHECK_TOL: f64 = 1e-9;

/// Angle between two rays, in `[0, pi/2]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    /// `arccos(modulus)` with `modulus` clamped to `[0, 1]`.
    pub fn from_overlap(modulus: f64) -> Self {
        Angle(modulus.clamp(0.0, 1.0).acos())
    }

    pub fn from_radians(radians: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::FRAC_PI_2 + 1e-12).contains(&radians) {
            return Err(Error::InvalidArgument(format!(
                "angle {radians} outside [0, pi/2]"
            )));
        }
        Ok(Angle(radians))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }
}

/// One evaluation of `lhs <= rhs`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub margin: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl InequalityCheck {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        Self::with_tolerance(lhs, rhs, CHECK_TOL)
    }

    pub fn with_tolerance(lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let margin = rhs - lhs;
        Self {
            lhs,
            rhs,
            margin,
            tolerance,
            passed: margin >= -tolerance,
        }
    }

    /// `|measured - expected| <= 0`, i.e. an equality within `tolerance`.
    pub fn equality(measured: f64, expected: f64, tolerance: f64) -> Self {
        let diff = (measured - expected).abs();
        Self::with_tolerance(
            if diff.is_nan() { f64::INFINITY } else { diff },
            0.0,
            tolerance,
        )
    }
}

/// `arccos |<a|b>|`.
pub fn angle(a: &StateVector, b: &StateVector) -> Result<Angle> {
    Ok(Angle::from_overlap(inner_product(a, b)?.norm()))
}

/// `|<a|P|a> - <b|P|b>| <= sin angle(a, b)`.
pub fn projector_deviation_check(
    a: &StateVector,
    b: &StateVector,
    p: &Projector,
) -> Result<InequalityCheck> {
    let rhs = angle(a, b)?.sin();
    let lhs = (p.probability(a)? - p.probability(b)?).abs();
    Ok(InequalityCheck::new(lhs, rhs))
}

/// `(Tr sqrt(sqrt(chi) omega sqrt(chi)))^2`.
///
/// This is the closed form of the supremum of `|<u|v>|^2` over
/// purifications; no purification is constructed. It is evaluated as the
/// squared trace norm of `A^dagger B` for support factors `A A^dagger = chi`,
/// `B B^dagger = omega`, which keeps rank-deficient states (pure states in
/// particular) accurate to rounding instead of to its square root.
pub fn uhlmann_fidelity(chi: &DensityOperator, omega: &DensityOperator) -> Result<f64> {
    if chi.dim() != omega.dim() {
        return Err(Error::DimensionMismatch(chi.dim(), omega.dim()));
    }
    let a = psd_support_factor(chi.matrix())?;
    let b = psd_support_factor(omega.matrix())?;
    let cross: DMatrix<Complex64> = a.adjoint() * b;
    let tr: f64 = cross.singular_values().iter().sum();
    Ok(tr * tr)
}

/// `|Tr(P chi) - Tr(P omega)| <= sqrt(1 - F(chi, omega))`.
pub fn mixed_probability_bound_check(
    chi: &DensityOperator,
    omega: &DensityOperator,
    p: &Projector,
) -> Result<InequalityCheck> {
    let f = uhlmann_fidelity(chi, omega)?;
    let rhs = (1.0 - f).max(0.0).sqrt();
    let lhs = (chi.probability(p)? - omega.probability(p)?).abs();
    Ok(InequalityCheck::new(lhs, rhs))
}

/// `angle(x, y) <= angle(x, z) + angle(y, z)`.
pub fn spherical_triangle_check(
    x: &StateVector,
    y: &StateVector,
    z: &StateVector,
) -> Result<InequalityCheck> {
    let lhs = angle(x, y)?.radians();
    let rhs = angle(x, z)?.radians() + angle(y, z)?.radians();
    Ok(InequalityCheck::new(lhs, rhs))
}

/// Probability that system I shows property `projector` after the joint
/// unitary acts on `|s><s| (x) ancilla`.
fn evolved_probability(
    s: &StateVector,
    ancilla: &DensityOperator,
    joint_unitary: &DMatrix<Complex64>,
    projector: &Projector,
) -> Result<f64> {
    let joint = DensityOperator::pure(s)
        .tensor(ancilla)?
        .evolve(joint_unitary)?;
    let reduced = partial_trace(&joint, (s.dim(), ancilla.dim()), Subsystem::A)?;
    reduced.probability(projector)
}

/// `|Tr[(P (x) 1) sigma_phi] - Tr[(P (x) 1) sigma_psi]| <= sin angle(phi, psi)`
/// with `sigma_s = U (|s><s| (x) ancilla) U^dagger`.
pub fn evolved_projector_check(
    phi: &StateVector,
    psi: &StateVector,
    ancilla: &DensityOperator,
    joint_unitary: &DMatrix<Complex64>,
    projector: &Projector,
) -> Result<InequalityCheck> {
    let rhs = angle(phi, psi)?.sin();
    if projector.dim() != phi.dim() {
        return Err(Error::DimensionMismatch(projector.dim(), phi.dim()));
    }
    let w_phi = evolved_probability(phi, ancilla, joint_unitary, projector)?;
    let w_psi = evolved_probability(psi, ancilla, joint_unitary, projector)?;
    Ok(InequalityCheck::new((w_phi - w_psi).abs(), rhs))
}

/// Transition-probability form of [`evolved_projector_check`] with
/// `P = |target><target|`.
pub fn transition_probability_check(
    phi: &StateVector,
    psi: &StateVector,
    ancilla: &DensityOperator,
    joint_unitary: &DMatrix<Complex64>,
    target: &StateVector,
) -> Result<InequalityCheck> {
    evolved_projector_check(
        phi,
        psi,
        ancilla,
        joint_unitary,
        &Projector::rank_one(target),
    )
}
