use nalgebra::DVector;
use num_complex::Complex64;

use super::{CloneTask, PairMember};
use crate::hilbert::{gram_schmidt_pair, tensor_power, StateVector, NORM_TOL};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Vector in reduced coordinates: `c1, c2` in the canonical frame of
/// `span{|phi^L>, |psi^L>}` plus components along further orthonormal
/// directions outside that plane.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneVector {
    pub c1: Complex64,
    pub c2: Complex64,
    pub outside: Vec<Complex64>,
}

impl PlaneVector {
    pub fn in_plane(c1: Complex64, c2: Complex64) -> Self {
        Self {
            c1,
            c2,
            outside: Vec::new(),
        }
    }

    /// Real unit vector rotated by `theta` from `e1` towards `e2`.
    pub fn at_angle(theta: f64) -> Self {
        Self::in_plane(
            Complex64::new(theta.cos(), 0.0),
            Complex64::new(theta.sin(), 0.0),
        )
    }

    pub fn from_coordinates(coords: &[Complex64]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidArgument(
                "plane vector needs at least two coordinates".into(),
            ));
        }
        let v = Self {
            c1: coords[0],
            c2: coords[1],
            outside: coords[2..].to_vec(),
        };
        let norm = v.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(v)
    }

    pub fn coordinates(&self, len: usize) -> Vec<Complex64> {
        let mut out = vec![self.c1, self.c2];
        out.extend_from_slice(&self.outside);
        out.resize(len.max(out.len()), ZERO);
        out
    }

    /// Norm of the component outside the plane.
    pub fn residual(&self) -> f64 {
        self.outside
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn norm(&self) -> f64 {
        (self.c1.norm_sqr() + self.c2.norm_sqr() + self.residual().powi(2)).sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PlaneVector) -> Complex64 {
        let tail: Complex64 = self
            .outside
            .iter()
            .zip(&other.outside)
            .map(|(a, b)| a.conj() * b)
            .sum();
        self.c1.conj() * other.c1 + self.c2.conj() * other.c2 + tail
    }

    /// Splits `self` against the unit in-plane ray `ideal`.
    pub fn decompose(&self, ideal: &PlaneVector) -> Decomposition {
        let q = ideal.inner(self);
        let p1 = self.c1 - q * ideal.c1;
        let p2 = self.c2 - q * ideal.c2;
        let perp = (p1.norm_sqr() + p2.norm_sqr() + self.residual().powi(2)).sqrt();
        Decomposition {
            q_norm: q.norm(),
            perp_norm: perp,
        }
    }
}

/// Norms of the parts of an output along and orthogonal to the ideal
/// subspace: `q_norm = cos delta^(s)`, `perp_norm = sin delta^(s) = X^(s)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Decomposition {
    pub q_norm: f64,
    pub perp_norm: f64,
}

impl Decomposition {
    /// Angle between the output and its ideal ray.
    pub fn angle(&self) -> f64 {
        self.perp_norm.atan2(self.q_norm)
    }
}

/// Splits `v` into `|s^L> (x) |q> + |perp>`, where `v` lives either in the
/// space of `ideal_base` itself or in `ideal_base (x) C^k` with a machine
/// factor.
pub fn decompose_output(v: &StateVector, ideal_base: &StateVector) -> Result<Decomposition> {
    let (q, perp) = split_output(v, ideal_base)?;
    Ok(Decomposition {
        q_norm: q.norm(),
        perp_norm: perp,
    })
}

/// The machine-factor vector `q = (<s^L| (x) 1)|v>` and `||perp||`.
pub(crate) fn split_output(
    v: &StateVector,
    ideal_base: &StateVector,
) -> Result<(DVector<Complex64>, f64)> {
    let base = ideal_base.dim();
    if !v.dim().is_multiple_of(base) {
        return Err(Error::DimensionMismatch(v.dim(), base));
    }
    let k = v.dim() / base;
    let amps = v.amplitudes();
    let ideal = ideal_base.amplitudes();
    let q = DVector::from_fn(k, |j, _| {
        (0..base)
            .map(|i| ideal[i].conj() * amps[i * k + j])
            .sum::<Complex64>()
    });
    let perp = (0..base)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| (amps[i * k + j] - ideal[i] * q[j]).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Ok((q, perp))
}

/// Orthonormal frame `(e1, e2)` of `span{|phi^L>, |psi^L>}` with
/// `e1 = |phi^L>` and `|psi^L> = z^L e1 + sqrt(1 - z^2L) e2`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneFrame {
    pub e1: StateVector,
    pub e2: StateVector,
}

impl PlaneFrame {
    /// Full-space vector `c1 e1 + c2 e2`. Only coplanar vectors embed.
    pub fn embed(&self, v: &PlaneVector) -> Result<StateVector> {
        if v.residual() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "vector leaves the plane (residual {:e})",
                v.residual()
            )));
        }
        StateVector::normalized(self.e1.as_vector() * v.c1 + self.e2.as_vector() * v.c2)
    }
}

pub fn canonical_plane(task: &CloneTask) -> Result<PlaneFrame> {
    task.require_distinct()?;
    let phi_l = tensor_power(task.pair().phi(), task.l())?;
    let psi_l = tensor_power(task.pair().psi(), task.l())?;
    let (e1, e2) = gram_schmidt_pair(&phi_l, &psi_l)?;
    Ok(PlaneFrame { e1, e2 })
}

/// Ideal output `|s^L>` in plane coordinates.
pub fn ideal_plane_vector(task: &CloneTask, which: PairMember) -> PlaneVector {
    match which {
        PairMember::Phi => PlaneVector::in_plane(Complex64::new(1.0, 0.0), ZERO),
        PairMember::Psi => PlaneVector::in_plane(
            Complex64::new(task.z().powi(task.l() as i32), 0.0),
            Complex64::new(task.ideal_sine(), 0.0),
        ),
    }
}
