use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::geometry::Angle;
use crate::hilbert::{inner_product, random_state, Rng, StateVector};
use crate::{Error, Result};

/// Member of the prepared pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairMember {
    Phi,
    Psi,
}

impl std::str::FromStr for PairMember {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(PairMember::Phi),
            "psi" => Ok(PairMember::Psi),
            other => Err(Error::InvalidArgument(format!(
                "expected 'phi' or 'psi', got '{other}'"
            ))),
        }
    }
}

/// The set `{|phi>, |psi>}` to be copied.
///
/// `psi` is re-phased on construction so that `<phi|psi> = z` is real and
/// non-negative.
#[derive(Clone, Debug, PartialEq)]
pub struct PreparedPair {
    phi: StateVector,
    psi: StateVector,
    z: f64,
}

impl PreparedPair {
    pub fn new(phi: StateVector, psi: StateVector) -> Result<Self> {
        if phi.dim() < 2 {
            return Err(Error::InvalidArgument(
                "single-particle dimension must be at least 2".into(),
            ));
        }
        let ov = inner_product(&phi, &psi)?;
        let z = ov.norm();
        let psi = if z > 0.0 {
            psi.with_phase(-ov.arg())
        } else {
            psi
        };
        Ok(Self { phi, psi, z })
    }

    /// `phi = |0>`, `psi = z|0> + sqrt(1 - z^2)|1>` in dimension `dim`.
    pub fn with_overlap(z: f64, dim: usize) -> Result<Self> {
        check_overlap(z)?;
        let phi = StateVector::basis(dim.max(1), 0)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); dim.max(2)];
        amps[0] = Complex64::new(z, 0.0);
        amps[1] = Complex64::new(((1.0 - z) * (1.0 + z)).sqrt(), 0.0);
        Self::new(phi, StateVector::new(amps)?)
    }

    /// Haar-random `phi` and a `psi` at overlap modulus `z` with a random
    /// orthogonal direction and global phase.
    pub fn random_with_overlap(z: f64, dim: usize, rng: &mut Rng) -> Result<Self> {
        check_overlap(z)?;
        if dim < 2 {
            return Err(Error::InvalidArgument(
                "single-particle dimension must be at least 2".into(),
            ));
        }
        let phi = random_state(dim, rng)?;
        let w = loop {
            let r = random_state(dim, rng)?;
            let ov = inner_product(&phi, &r)?;
            let w = r.as_vector() - phi.as_vector() * ov;
            if w.norm() > 1e-6 {
                break StateVector::normalized(w)?;
            }
        };
        let s = ((1.0 - z) * (1.0 + z)).sqrt();
        let psi = StateVector::normalized(
            phi.as_vector() * Complex64::new(z, 0.0) + w.as_vector() * Complex64::new(s, 0.0),
        )?;
        let theta = rng.uniform(0.0, std::f64::consts::TAU);
        Self::new(
            phi.with_phase(rng.uniform(0.0, std::f64::consts::TAU)),
            psi.with_phase(theta),
        )
    }

    pub fn phi(&self) -> &StateVector {
        &self.phi
    }

    pub fn psi(&self) -> &StateVector {
        &self.psi
    }

    pub fn member(&self, which: PairMember) -> &StateVector {
        match which {
            PairMember::Phi => &self.phi,
            PairMember::Psi => &self.psi,
        }
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }
}

fn check_overlap(z: f64) -> Result<()> {
    if (0.0..=1.0).contains(&z) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("z = {z} outside [0, 1]")))
    }
}

/// `N -> L` copying of a prepared pair with `M = L - N` blank slots.
#[derive(Clone, Debug, PartialEq)]
pub struct CloneTask {
    pair: PreparedPair,
    n_inputs: usize,
    n_outputs: usize,
    blank: StateVector,
}

impl CloneTask {
    /// Task with the blank slots in `|0>`.
    pub fn new(pair: PreparedPair, n_inputs: usize, n_outputs: usize) -> Result<Self> {
        let blank = StateVector::basis(pair.dim(), 0)?;
        Self::with_blank(pair, n_inputs, n_outputs, blank)
    }

    pub fn with_blank(
        pair: PreparedPair,
        n_inputs: usize,
        n_outputs: usize,
        blank: StateVector,
    ) -> Result<Self> {
        if n_inputs < 1 || n_outputs <= n_inputs {
            return Err(Error::InvalidArgument(format!(
                "need L > N >= 1, got N = {n_inputs}, L = {n_outputs}"
            )));
        }
        if blank.dim() != pair.dim() {
            return Err(Error::DimensionMismatch(blank.dim(), pair.dim()));
        }
        Ok(Self {
            pair,
            n_inputs,
            n_outputs,
            blank,
        })
    }

    pub fn pair(&self) -> &PreparedPair {
        &self.pair
    }

    pub fn z(&self) -> f64 {
        self.pair.z
    }

    pub fn n(&self) -> usize {
        self.n_inputs
    }

    pub fn l(&self) -> usize {
        self.n_outputs
    }

    /// `M = L - N`.
    pub fn blanks(&self) -> usize {
        self.n_outputs - self.n_inputs
    }

    pub fn blank(&self) -> &StateVector {
        &self.blank
    }

    /// `delta_K = arccos(z^K)`.
    pub fn delta(&self, k: usize) -> Angle {
        Angle::from_overlap(self.z().powi(k as i32))
    }

    /// `<phi^N (x) 0^M | psi^N (x) 0^M>`, which the cloner outputs must
    /// reproduce.
    pub fn input_overlap(&self) -> Complex64 {
        let ov = Complex64::new(self.z(), 0.0).powu(self.n_inputs as u32);
        let b = self.blank.as_vector().dotc(self.blank.as_vector());
        ov * b.powu(self.blanks() as u32)
    }

    /// `sin delta_L = sqrt(1 - z^(2L))`.
    pub fn ideal_sine(&self) -> f64 {
        let zl = self.z().powi(self.n_outputs as i32);
        ((1.0 - zl) * (1.0 + zl)).max(0.0).sqrt()
    }

    pub(crate) fn require_distinct(&self) -> Result<()> {
        if self.ideal_sine() < 1e-9 {
            return Err(Error::DegeneratePair(format!(
                "ideal outputs coincide (z = {})",
                self.z()
            )));
        }
        Ok(())
    }
}

/// `delta_L - delta_N`, the least value of `delta^(phi) + delta^(psi)` any
/// cloner can reach.
pub fn ideal_angle_floor(task: &CloneTask) -> Angle {
    let gap = task.delta(task.l()).radians() - task.delta(task.n()).radians();
    Angle::from_radians(gap.max(0.0)).unwrap_or(Angle::ZERO)
}
