//! Closed-form curves in the overlap modulus `z`.
//!
//! With `delta_K = arccos(z^K)` and the floor `x = delta_L - delta_N`:
//!
//! | curve | z-form | angle form |
//! |-------|--------|------------|
//! | `re-lower` | `z^N - z^L sqrt((1-z^2N)/(1-z^2L))` | `sin x / sin delta_L` |
//! | `ae-lower` | `z^N sqrt(1-z^2L) - z^L sqrt(1-z^2N)` | `sin x` |
//! | `re-sym` | `sqrt2 [ (1-z^(N+L))/(1-z^2L) - sqrt((1-z^2N)/(1-z^2L)) ]^(1/2)` | `2 sin(x/2) / sin delta_L` |
//! | `f-diff` | `(RE_S - RE_A) / RE_A` | `sec(x/2) - 1` |
//!
//! The z-forms rewrite every `(1 - z^a)/(1 - z^b)` factor as a ratio of
//! finite geometric sums, which removes the cancellation near `z = 1` and
//! makes `z = 1` itself evaluate to the analytic limit.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Curve {
    ReLower,
    AeLower,
    ReSym,
    FDiff,
}

impl Curve {
    pub const ALL: [Curve; 4] = [Curve::ReLower, Curve::AeLower, Curve::ReSym, Curve::FDiff];

    pub fn name(self) -> &'static str {
        match self {
            Curve::ReLower => "re-lower",
            Curve::AeLower => "ae-lower",
            Curve::ReSym => "re-sym",
            Curve::FDiff => "f-diff",
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Curve::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown curve '{s}'")))
    }
}

/// One sample of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundPoint {
    pub z: f64,
    pub value: f64,
    pub curve: Curve,
    pub n: usize,
    pub l: usize,
}

pub(crate) fn validate(z: f64, n: usize, l: usize) -> Result<()> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::InvalidArgument(format!("z = {z} outside [0, 1]")));
    }
    if n < 1 || l <= n {
        return Err(Error::InvalidArgument(format!(
            "need L > N >= 1, got N = {n}, L = {l}"
        )));
    }
    Ok(())
}

/// `sum_{k<terms} r^k`.
fn geometric_sum(r: f64, terms: usize) -> f64 {
    let mut acc = 0.0;
    let mut p = 1.0;
    for _ in 0..terms {
        acc += p;
        p *= r;
    }
    acc
}

/// `(1 - z^(2N)) / (1 - z^(2L))`, equal to `N/L` at `z = 1`.
fn sine_ratio_sq(z: f64, n: usize, l: usize) -> f64 {
    let q = z * z;
    geometric_sum(q, n) / geometric_sum(q, l)
}

/// Lower bound `F(z|N,L)` on the relative error; `1 - sqrt(N/L)` at `z = 1`.
pub fn re_lower_bound(z: f64, n: usize, l: usize) -> Result<f64> {
    validate(z, n, l)?;
    Ok(z.powi(n as i32) - z.powi(l as i32) * sine_ratio_sq(z, n, l).sqrt())
}

/// Lower bound on the absolute error, `sin(delta_L - delta_N)`.
pub fn ae_lower_bound(z: f64, n: usize, l: usize) -> Result<f64> {
    validate(z, n, l)?;
    let q = z * z;
    let s = ((1.0 - z) * (1.0 + z)).max(0.0).sqrt();
    Ok(s * (z.powi(n as i32) * geometric_sum(q, l).sqrt()
        - z.powi(l as i32) * geometric_sum(q, n).sqrt()))
}

/// Relative error of the symmetric cloner. Undefined at `z = 1`.
pub fn re_symmetric(z: f64, n: usize, l: usize) -> Result<f64> {
    validate(z, n, l)?;
    if z >= 1.0 {
        return Err(Error::DegeneratePair(
            "relative error is 0/0 for identical states".into(),
        ));
    }
    Ok(re_symmetric_unchecked(z, n, l))
}

fn re_symmetric_unchecked(z: f64, n: usize, l: usize) -> f64 {
    let (num, inner) = symmetric_parts(z, n, l);
    num / ((1.0 + z) * geometric_sum(z * z, l) * inner).sqrt()
}

/// `sqrt(2) z^N S_z(L-N)` and `S_z(N+L) + (1+z) sqrt(S_q(N) S_q(L))`
/// with `S_r(K) = sum_{k<K} r^k`, `q = z^2`.
///
/// Writing `a = z^N`, `b = z^L`, the identity
/// `(1 - ab)^2 - (1 - a^2)(1 - b^2) = (a - b)^2` turns
/// `1 - cos(delta_L - delta_N) = 1 - ab - sqrt((1 - a^2)(1 - b^2))` into
/// `(a - b)^2 / (1 - ab + sqrt((1 - a^2)(1 - b^2)))`, free of cancellation
/// near both endpoints. Then `AE_S^2 = (1 - z) num^2 / inner` and
/// `RE_S^2 = num^2 / ((1 + z) S_q(L) inner)`.
fn symmetric_parts(z: f64, n: usize, l: usize) -> (f64, f64) {
    let q = z * z;
    let num = std::f64::consts::SQRT_2 * z.powi(n as i32) * geometric_sum(z, l - n);
    let inner =
        geometric_sum(z, n + l) + (1.0 + z) * (geometric_sum(q, n) * geometric_sum(q, l)).sqrt();
    (num, inner)
}

/// Absolute error of the symmetric cloner, `2 sin((delta_L - delta_N)/2)`.
pub fn ae_symmetric(z: f64, n: usize, l: usize) -> Result<f64> {
    validate(z, n, l)?;
    let (num, inner) = symmetric_parts(z, n, l);
    Ok(num * ((1.0 - z) / inner).sqrt())
}

/// `f(z|N,L) = (RE_S - RE_A) / RE_A`.
pub fn f_rel_diff(z: f64, n: usize, l: usize) -> Result<f64> {
    let re_a = re_lower_bound(z, n, l)?;
    if re_a < 1e-12 {
        return Err(Error::UndefinedRatio(format!("RE_A = {re_a:e} at z = {z}")));
    }
    let re_s = re_symmetric(z, n, l)?;
    Ok((re_s - re_a) / re_a)
}

/// Evaluates `curve` at `z`, substituting the analytic limits where the
/// scalar functions are undefined: `re-sym -> 1 - sqrt(N/L)` at `z = 1`,
/// and `f-diff -> 0` at both `z = 0` and `z = 1`.
pub fn curve_point(curve: Curve, z: f64, n: usize, l: usize) -> Result<BoundPoint> {
    validate(z, n, l)?;
    let value = match curve {
        Curve::ReLower => re_lower_bound(z, n, l)?,
        Curve::AeLower => ae_lower_bound(z, n, l)?,
        Curve::ReSym => re_symmetric_unchecked(z, n, l),
        Curve::FDiff => match f_rel_diff(z, n, l) {
            Ok(v) => v,
            Err(Error::UndefinedRatio(_)) | Err(Error::DegeneratePair(_)) => 0.0,
            Err(e) => return Err(e),
        },
    };
    Ok(BoundPoint {
        z,
        value,
        curve,
        n,
        l,
    })
}

/// The same curves evaluated through the angles `delta_K = arccos(z^K)`.
/// Valid on `[0, 1)`; used as an independent cross-check of the z-forms.
pub mod angle_form {
    use super::validate;
    use crate::{Error, Result};

    fn deltas(z: f64, n: usize, l: usize) -> Result<(f64, f64)> {
        validate(z, n, l)?;
        if z >= 1.0 {
            return Err(Error::DegeneratePair("angle form needs z < 1".into()));
        }
        Ok((z.powi(n as i32).acos(), z.powi(l as i32).acos()))
    }

    pub fn floor(z: f64, n: usize, l: usize) -> Result<f64> {
        let (dn, dl) = deltas(z, n, l)?;
        Ok(dl - dn)
    }

    pub fn re_lower_bound(z: f64, n: usize, l: usize) -> Result<f64> {
        let (dn, dl) = deltas(z, n, l)?;
        Ok((dl - dn).sin() / dl.sin())
    }

    pub fn ae_lower_bound(z: f64, n: usize, l: usize) -> Result<f64> {
        let (dn, dl) = deltas(z, n, l)?;
        Ok((dl - dn).sin())
    }

    pub fn re_symmetric(z: f64, n: usize, l: usize) -> Result<f64> {
        let (dn, dl) = deltas(z, n, l)?;
        Ok(2.0 * ((dl - dn) / 2.0).sin() / dl.sin())
    }

    pub fn ae_symmetric(z: f64, n: usize, l: usize) -> Result<f64> {
        let (dn, dl) = deltas(z, n, l)?;
        Ok(2.0 * ((dl - dn) / 2.0).sin())
    }

    pub fn f_rel_diff(z: f64, n: usize, l: usize) -> Result<f64> {
        let x = floor(z, n, l)?;
        Ok(1.0 / (x / 2.0).cos() - 1.0)
    }
}

/// Outcome of [`asymptotic_checks`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub n: usize,
    pub l_max: usize,
    /// max over the z grid of `z^N - F(z|N,L_max)`.
    pub max_tail_gap: f64,
    /// `z^N - F(z|N,L_max) <= z^L_max` on the whole grid.
    pub tail_bound_holds: bool,
    /// `z^N - F(z|N,L)` is non-increasing in `L` at every grid point.
    pub monotone: bool,
    /// `F(z|N,L) <= z^N` for every sampled `(z, L)`.
    pub below_first_term: bool,
    /// max over `L` of `|F(1 - 1e-9|N,L) - (1 - sqrt(N/L))|`.
    pub max_limit_deviation: f64,
    pub passed: bool,
}

/// Large-`L` and `z -> 1` behaviour of `F(z|N,L)`.
pub fn asymptotic_checks(n: usize, l_max: usize) -> Result<AsymptoticReport> {
    validate(0.5, n, l_max)?;
    let grid: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    let mut max_tail_gap = 0.0f64;
    let mut tail_bound_holds = true;
    let mut monotone = true;
    let mut below_first_term = true;
    for &z in &grid {
        let mut prev = f64::INFINITY;
        for l in n + 1..=l_max {
            let gap = z.powi(n as i32) - re_lower_bound(z, n, l)?;
            below_first_term &= gap >= -1e-15;
            monotone &= gap <= prev + 1e-15;
            prev = gap;
        }
        max_tail_gap = max_tail_gap.max(prev);
        tail_bound_holds &= prev <= z.powi(l_max as i32) + 1e-15;
    }
    let mut max_limit_deviation = 0.0f64;
    for l in n + 1..=l_max {
        let limit = 1.0 - (n as f64 / l as f64).sqrt();
        let dev = (re_lower_bound(1.0 - 1e-9, n, l)? - limit).abs();
        max_limit_deviation = max_limit_deviation.max(dev);
    }
    let passed = tail_bound_holds && monotone && below_first_term && max_limit_deviation < 1e-6;
    Ok(AsymptoticReport {
        n,
        l_max,
        max_tail_gap,
        tail_bound_holds,
        monotone,
        below_first_term,
        max_limit_deviation,
        passed,
    })
}
