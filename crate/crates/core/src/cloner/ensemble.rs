use super::{ClonerResult, ErrorReport};
use crate::{Error, Result};

/// Cloner driven by a mixed machine state `sum_m mu_m |m><m|`: member `m`
/// is the cloner realized when the machine starts in `|m>`.
#[derive(Clone, Debug, PartialEq)]
pub struct MachineEnsemble {
    weights: Vec<f64>,
    members: Vec<ClonerResult>,
}

impl MachineEnsemble {
    pub fn new(weights: Vec<f64>, members: Vec<ClonerResult>) -> Result<Self> {
        if weights.is_empty() || weights.len() != members.len() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} members",
                weights.len(),
                members.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| w.is_nan() || **w < 0.0) {
            return Err(Error::InvalidArgument(format!("negative weight {w}")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "weights sum to {total}, not 1"
            )));
        }
        Ok(Self { weights, members })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn members(&self) -> &[ClonerResult] {
        &self.members
    }
}

/// `X^(s) = sum mu_m X_m^(s)`, `AE = X^(phi) + X^(psi)` and the weighted
/// ratio `RE = sum mu_m AE_m / sin delta(Id_m^(phi), Id_m^(psi))`.
///
/// `denom` is reported as the effective `AE / RE`.
pub fn mixed_machine_report(ensemble: &MachineEnsemble) -> Result<ErrorReport> {
    let mut x_phi = 0.0;
    let mut x_psi = 0.0;
    let mut re = 0.0;
    let mut mean_denom = 0.0;
    for (mu, m) in ensemble.weights.iter().zip(&ensemble.members) {
        let e = &m.errors;
        if e.denom < 1e-9 {
            return Err(Error::DegeneratePair(format!(
                "member denominator {:e}",
                e.denom
            )));
        }
        x_phi += mu * e.x_phi;
        x_psi += mu * e.x_psi;
        re += mu * (e.x_phi + e.x_psi) / e.denom;
        mean_denom += mu * e.denom;
    }
    let ae = x_phi + x_psi;
    let denom = if re > 0.0 { ae / re } else { mean_denom };
    Ok(ErrorReport {
        x_phi,
        x_psi,
        ae,
        re,
        denom,
    })
}
