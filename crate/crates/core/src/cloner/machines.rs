//! Coplanar cloners and the copying-error metrics.
//!
//! A cloner is represented by its two outputs. Because the outputs of any
//! unitary reproduce the input inner product `<phi^N 0^M|psi^N 0^M> = z^N`,
//! equality of that inner product ("Gram certificate") is enough to know a
//! realizing unitary exists.
//!
//! Inside the plane spanned by `|phi^L>` (angle 0) and `|psi^L>` (angle
//! `delta_L`), the family of floor-saturating cloners is parametrized by the
//! error `a` of the `phi` branch: `V^(phi)` sits at angle `a`, `V^(psi)` at
//! `a + delta_N`, so `delta^(psi) = delta_L - delta_N - a`.

use num_complex::Complex64;
use serde::Serialize;

use super::plane::split_output;
use super::{ideal_angle_floor, ideal_plane_vector, CloneTask, PairMember, PlaneVector};
use crate::geometry::Angle;
use crate::hilbert::{tensor_power, StateVector};
use crate::{Error, Result};

/// Absolute and relative copying errors of an output pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ErrorReport {
    pub x_phi: f64,
    pub x_psi: f64,
    /// `x_phi + x_psi`.
    pub ae: f64,
    /// `ae / denom`.
    pub re: f64,
    /// Sine of the angle between the two ideal outputs.
    pub denom: f64,
}

impl ErrorReport {
    fn new(x_phi: f64, x_psi: f64, denom: f64) -> Result<Self> {
        if denom < 1e-9 {
            return Err(Error::DegeneratePair(format!(
                "ideal outputs are indistinguishable (sin = {denom:e})"
            )));
        }
        let ae = x_phi + x_psi;
        Ok(Self {
            x_phi,
            x_psi,
            ae,
            re: ae / denom,
            denom,
        })
    }
}

/// Errors of plane-coordinate outputs against `|phi^L>` and `|psi^L>`.
pub fn error_report(
    task: &CloneTask,
    v_phi: &PlaneVector,
    v_psi: &PlaneVector,
) -> Result<ErrorReport> {
    for v in [v_phi, v_psi] {
        if (v.norm() - 1.0).abs() > crate::hilbert::NORM_TOL {
            return Err(Error::NotNormalized(v.norm()));
        }
    }
    let id_phi = ideal_plane_vector(task, PairMember::Phi);
    let id_psi = ideal_plane_vector(task, PairMember::Psi);
    // for unit vectors of C^2, sin of the ray angle is |u1 v2 - u2 v1|
    let denom = (id_phi.c1 * id_psi.c2 - id_phi.c2 * id_psi.c1).norm();
    ErrorReport::new(
        v_phi.decompose(&id_phi).perp_norm,
        v_psi.decompose(&id_psi).perp_norm,
        denom,
    )
}

/// Errors of full-space outputs, optionally carrying a machine factor:
/// `v_s` lives in `(C^d)^(x)L (x) C^k`. The ideal outputs are
/// `|s^L> (x) |k^(s)>` with `|k^(s)>` the normalized machine part of `v_s`.
pub fn error_report_full(
    task: &CloneTask,
    v_phi: &StateVector,
    v_psi: &StateVector,
) -> Result<ErrorReport> {
    let phi_l = tensor_power(task.pair().phi(), task.l())?;
    let psi_l = tensor_power(task.pair().psi(), task.l())?;
    if v_phi.dim() != v_psi.dim() {
        return Err(Error::DimensionMismatch(v_phi.dim(), v_psi.dim()));
    }
    let (q_phi, x_phi) = split_output(v_phi, &phi_l)?;
    let (q_psi, x_psi) = split_output(v_psi, &psi_l)?;
    let unit = |q: &nalgebra::DVector<Complex64>| {
        let n = q.norm();
        (n > 1e-15).then(|| q.unscale(n))
    };
    let machine_overlap = match (unit(&q_phi), unit(&q_psi)) {
        (Some(a), Some(b)) => a.dotc(&b).norm(),
        // the infimum leaves k free; collinear choices maximize the angle's cosine
        _ => 1.0,
    };
    let ideal_overlap = task.z().powi(task.l() as i32) * machine_overlap;
    let denom = ((1.0 - ideal_overlap) * (1.0 + ideal_overlap))
        .max(0.0)
        .sqrt();
    ErrorReport::new(x_phi, x_psi, denom)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClonerKind {
    /// Equal error angles `(delta_L - delta_N) / 2`.
    Symmetric,
    /// One member copied perfectly, the other carries the whole floor.
    Asymmetric { perfect: PairMember },
    /// Coplanar cloner with `delta^(phi) = phi_error`.
    Split { phi_error: f64 },
    /// Arbitrary Gram-preserving outputs, possibly out of the plane.
    Sampled,
}

/// Output pair of a cloner together with its measured errors.
#[derive(Clone, Debug, PartialEq)]
pub struct ClonerResult {
    pub kind: ClonerKind,
    pub v_phi: PlaneVector,
    pub v_psi: PlaneVector,
    pub delta_phi: Angle,
    pub delta_psi: Angle,
    pub errors: ErrorReport,
    /// `<V^(phi)|V^(psi)>`.
    pub gram: Complex64,
}

impl ClonerResult {
    pub fn from_outputs(
        task: &CloneTask,
        kind: ClonerKind,
        v_phi: PlaneVector,
        v_psi: PlaneVector,
    ) -> Result<Self> {
        let errors = error_report(task, &v_phi, &v_psi)?;
        let d_phi = v_phi.decompose(&ideal_plane_vector(task, PairMember::Phi));
        let d_psi = v_psi.decompose(&ideal_plane_vector(task, PairMember::Psi));
        let gram = v_phi.inner(&v_psi);
        Ok(Self {
            kind,
            delta_phi: Angle::from_radians(d_phi.angle())?,
            delta_psi: Angle::from_radians(d_psi.angle())?,
            errors,
            gram,
            v_phi,
            v_psi,
        })
    }

    /// `|<V^(phi)|V^(psi)> - z^N|`.
    pub fn gram_residual(&self, task: &CloneTask) -> f64 {
        (self.gram - task.input_overlap()).norm()
    }

    /// Largest out-of-plane norm of the two outputs.
    pub fn coplanarity_residual(&self) -> f64 {
        self.v_phi.residual().max(self.v_psi.residual())
    }

    /// `delta^(phi) + delta^(psi)`.
    pub fn angle_sum(&self) -> f64 {
        self.delta_phi.radians() + self.delta_psi.radians()
    }

    pub fn output(&self, which: PairMember) -> &PlaneVector {
        match which {
            PairMember::Phi => &self.v_phi,
            PairMember::Psi => &self.v_psi,
        }
    }

    pub fn error_size(&self, which: PairMember) -> f64 {
        match which {
            PairMember::Phi => self.errors.x_phi,
            PairMember::Psi => self.errors.x_psi,
        }
    }
}

/// Coplanar cloner that saturates the angle floor with `delta^(phi) = phi_error`.
pub fn split_cloner(task: &CloneTask, phi_error: f64) -> Result<ClonerResult> {
    task.require_distinct()?;
    let floor = ideal_angle_floor(task).radians();
    if !(-1e-12..=floor + 1e-12).contains(&phi_error) {
        return Err(Error::InvalidArgument(format!(
            "split {phi_error} outside [0, {floor}]"
        )));
    }
    let a = phi_error.clamp(0.0, floor);
    let delta_n = task.delta(task.n()).radians();
    ClonerResult::from_outputs(
        task,
        ClonerKind::Split { phi_error: a },
        PlaneVector::at_angle(a),
        PlaneVector::at_angle(a + delta_n),
    )
}

/// The global-fidelity cloner: equal error angles for both states.
pub fn symmetric_cloner(task: &CloneTask) -> Result<ClonerResult> {
    let half = ideal_angle_floor(task).radians() / 2.0;
    let mut res = split_cloner(task, half)?;
    res.kind = ClonerKind::Symmetric;
    Ok(res)
}

/// Copies `perfect` without error and puts the whole floor on the other
/// member.
pub fn asymmetric_cloner(task: &CloneTask, perfect: PairMember) -> Result<ClonerResult> {
    let a = match perfect {
        PairMember::Phi => 0.0,
        PairMember::Psi => ideal_angle_floor(task).radians(),
    };
    let mut res = split_cloner(task, a)?;
    res.kind = ClonerKind::Asymmetric { perfect };
    Ok(res)
}
