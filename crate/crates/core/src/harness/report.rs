use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{ae_lower_bound, re_lower_bound, re_symmetric};
use crate::cloner::{
    asymmetric_cloner, ideal_angle_floor, split_cloner, symmetric_cloner, CloneTask, ClonerResult,
    PairMember, PreparedPair,
};
use crate::error::invalid;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClonerChoice {
    Symmetric,
    Asymmetric,
    CustomSplit,
}

impl ClonerChoice {
    pub fn name(self) -> &'static str {
        match self {
            ClonerChoice::Symmetric => "symmetric",
            ClonerChoice::Asymmetric => "asymmetric",
            ClonerChoice::CustomSplit => "custom-split",
        }
    }
}

impl fmt::Display for ClonerChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClonerChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(ClonerChoice::Symmetric),
            "asymmetric" => Ok(ClonerChoice::Asymmetric),
            "custom-split" => Ok(ClonerChoice::CustomSplit),
            other => invalid(format!(
                "unknown cloner kind '{other}' (expected symmetric, asymmetric or custom-split)"
            )),
        }
    }
}

/// Parameters of a single cloner evaluation on qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClonerRequest {
    pub z: f64,
    pub n: usize,
    pub l: usize,
    pub kind: ClonerChoice,
    /// Member copied perfectly by the asymmetric cloner.
    pub perfect: PairMember,
    /// `delta^(phi)` of a custom split.
    pub split: Option<f64>,
}

impl ClonerRequest {
    pub fn new(z: f64, n: usize, l: usize, kind: ClonerChoice) -> Self {
        Self {
            z,
            n,
            l,
            kind,
            perfect: PairMember::Phi,
            split: None,
        }
    }
}

/// Measured errors of one cloner next to their closed forms.
///
/// `ae_reference` and `re_reference` are the closed-form values for the
/// requested cloner itself; the `*_lower_bound` fields are the optimal
/// values over all cloners.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClonerReport {
    pub kind: ClonerChoice,
    pub z: f64,
    pub n: usize,
    pub l: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<PairMember>,
    pub split: f64,
    pub delta_phi: f64,
    pub delta_psi: f64,
    pub x_phi: f64,
    pub x_psi: f64,
    pub ae: f64,
    pub re: f64,
    pub denom: f64,
    pub gram_re: f64,
    pub gram_im: f64,
    pub gram_residual: f64,
    pub coplanarity_residual: f64,
    pub floor: f64,
    pub ae_reference: f64,
    pub re_reference: f64,
    pub ae_lower_bound: f64,
    pub re_lower_bound: f64,
    pub re_symmetric: f64,
}

pub fn cmd_cloner(req: &ClonerRequest) -> Result<ClonerReport> {
    if !(req.z > 0.0 && req.z < 1.0) {
        return Err(Error::DegeneratePair(format!(
            "cloner evaluation needs 0 < z < 1, got {}",
            req.z
        )));
    }
    let task = CloneTask::new(PreparedPair::with_overlap(req.z, 2)?, req.n, req.l)?;
    let floor = ideal_angle_floor(&task).radians();
    let res: ClonerResult = match req.kind {
        ClonerChoice::Symmetric => symmetric_cloner(&task)?,
        ClonerChoice::Asymmetric => asymmetric_cloner(&task, req.perfect)?,
        ClonerChoice::CustomSplit => match req.split {
            Some(a) => split_cloner(&task, a)?,
            None => return invalid("custom-split needs a split value"),
        },
    };
    let a = res.delta_phi.radians();
    let sin_l = task.ideal_sine();
    let ae_reference = a.sin() + (floor - a).max(0.0).sin();
    Ok(ClonerReport {
        kind: req.kind,
        z: req.z,
        n: req.n,
        l: req.l,
        perfect: (req.kind == ClonerChoice::Asymmetric).then_some(req.perfect),
        split: a,
        delta_phi: a,
        delta_psi: res.delta_psi.radians(),
        x_phi: res.errors.x_phi,
        x_psi: res.errors.x_psi,
        ae: res.errors.ae,
        re: res.errors.re,
        denom: res.errors.denom,
        gram_re: res.gram.re,
        gram_im: res.gram.im,
        gram_residual: res.gram_residual(&task),
        coplanarity_residual: res.coplanarity_residual(),
        floor,
        ae_reference,
        re_reference: ae_reference / sin_l,
        ae_lower_bound: ae_lower_bound(req.z, req.n, req.l)?,
        re_lower_bound: re_lower_bound(req.z, req.n, req.l)?,
        re_symmetric: re_symmetric(req.z, req.n, req.l)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asymmetric_at_half() {
        let r = cmd_cloner(&ClonerRequest::new(0.5, 1, 2, ClonerChoice::Asymmetric)).unwrap();
        assert!((r.re - 0.276_393_202_250_021_03).abs() < 1e-12);
        assert!((r.re - r.re_lower_bound).abs() < 1e-12);
        assert!((r.ae - r.ae_lower_bound).abs() < 1e-12);
        assert!(r.gram_residual < 1e-9);
        assert_eq!(r.perfect, Some(PairMember::Phi));
    }

    #[test]
    fn symmetric_at_half() {
        let r = cmd_cloner(&ClonerRequest::new(0.5, 1, 2, ClonerChoice::Symmetric)).unwrap();
        assert!((r.re - 0.278_948_534_082_606_19).abs() < 1e-12);
        assert!((r.re - r.re_reference).abs() < 1e-12);
        assert!((r.re_reference - r.re_symmetric).abs() < 1e-12);
    }

    #[test]
    fn zero_split_is_the_phi_asymmetric_cloner() {
        let mut req = ClonerRequest::new(0.3, 2, 5, ClonerChoice::CustomSplit);
        req.split = Some(0.0);
        let split = cmd_cloner(&req).unwrap();
        let asym = cmd_cloner(&ClonerRequest::new(0.3, 2, 5, ClonerChoice::Asymmetric)).unwrap();
        for (a, b) in [
            (split.delta_phi, asym.delta_phi),
            (split.delta_psi, asym.delta_psi),
            (split.ae, asym.ae),
            (split.re, asym.re),
            (split.gram_residual, asym.gram_residual),
        ] {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_bad_requests() {
        for z in [0.0, 1.0, 1.2] {
            assert!(cmd_cloner(&ClonerRequest::new(z, 1, 2, ClonerChoice::Symmetric)).is_err());
        }
        let mut req = ClonerRequest::new(0.5, 1, 2, ClonerChoice::CustomSplit);
        assert!(cmd_cloner(&req).is_err());
        req.split = Some(0.5);
        assert!(cmd_cloner(&req).is_err());
        assert!("sym".parse::<ClonerChoice>().is_err());
    }

    #[test]
    fn json_field_names() {
        let r = cmd_cloner(&ClonerRequest::new(0.5, 1, 2, ClonerChoice::Symmetric)).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "delta_phi",
            "x_psi",
            "ae",
            "re",
            "ae_reference",
            "re_lower_bound",
            "gram_residual",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["kind"], "symmetric");
        assert!(v.get("perfect").is_none());
    }
}
