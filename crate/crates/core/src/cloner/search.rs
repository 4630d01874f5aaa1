//! Brute-force search over cloners.
//!
//! Three families are scanned:
//! - the coplanar floor-saturating cloners, on a uniform grid of the split
//!   `a = delta^(phi)` over `[0, delta_L - delta_N]`;
//! - random Gram-preserving output pairs in a four-dimensional reduced space
//!   (the plane plus two orthogonal directions), which generally exceed the
//!   floor;
//! - grid cloners pushed out of the plane by a small random unitary on the
//!   same reduced space.

use num_complex::Complex64;
use serde::Serialize;

use super::{ideal_angle_floor, split_cloner, CloneTask, ClonerKind, ClonerResult, PlaneVector};
use crate::hilbert::{hermitian_exp, random_hermitian, random_state, Rng};
use crate::{Error, Result};

const REDUCED_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BruteForceConfig {
    /// Points on the split grid, endpoints included. At least 100.
    pub grid_points: usize,
    /// Random cloners evaluated beyond the grid.
    pub samples: usize,
    /// Largest rotation time of the out-of-plane perturbations.
    pub perturbation: f64,
    pub seed: u64,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        Self {
            grid_points: 1000,
            samples: 1000,
            perturbation: 0.3,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BruteForceResult {
    /// Smallest relative error seen anywhere.
    pub min_re: f64,
    /// Split achieving the smallest relative error on the grid.
    pub argmin_split: f64,
    pub grid_min_re: f64,
    pub sampled_min_re: f64,
    /// Smallest `delta^(phi) + delta^(psi) - (delta_L - delta_N)` among the
    /// sampled cloners.
    pub min_floor_excess: f64,
    /// Largest Gram-certificate residual among everything evaluated.
    pub max_gram_residual: f64,
    pub evaluated: usize,
}

/// [`brute_force_min_re_with`] using the default sample count and seed.
pub fn brute_force_min_re(task: &CloneTask, grid_points: usize) -> Result<BruteForceResult> {
    brute_force_min_re_with(
        task,
        &BruteForceConfig {
            grid_points,
            ..BruteForceConfig::default()
        },
    )
}

pub fn brute_force_min_re_with(
    task: &CloneTask,
    config: &BruteForceConfig,
) -> Result<BruteForceResult> {
    task.require_distinct()?;
    if config.grid_points < 100 {
        return Err(Error::InvalidArgument(format!(
            "grid needs at least 100 points, got {}",
            config.grid_points
        )));
    }
    let floor = ideal_angle_floor(task).radians();
    let split_at = |k: usize| floor * k as f64 / (config.grid_points - 1) as f64;

    let mut grid_min_re = f64::INFINITY;
    let mut argmin_split = 0.0;
    let mut max_gram_residual = 0.0f64;
    for k in 0..config.grid_points {
        let a = split_at(k);
        let c = split_cloner(task, a)?;
        max_gram_residual = max_gram_residual.max(c.gram_residual(task));
        if c.errors.re < grid_min_re {
            grid_min_re = c.errors.re;
            argmin_split = a;
        }
    }

    let mut rng = Rng::new(config.seed);
    let mut sampled_min_re = f64::INFINITY;
    let mut min_floor_excess = f64::INFINITY;
    for s in 0..config.samples {
        let c = if s % 2 == 0 {
            sample_gram_preserving_cloner(task, &mut rng)?
        } else {
            let k = rng.int_inclusive(0, config.grid_points - 1);
            let base = split_cloner(task, split_at(k))?;
            let t = rng.uniform(0.0, config.perturbation);
            perturb_cloner(task, &base, t, &mut rng)?
        };
        max_gram_residual = max_gram_residual.max(c.gram_residual(task));
        sampled_min_re = sampled_min_re.min(c.errors.re);
        min_floor_excess = min_floor_excess.min(c.angle_sum() - floor);
    }

    Ok(BruteForceResult {
        min_re: grid_min_re.min(sampled_min_re),
        argmin_split,
        grid_min_re,
        sampled_min_re,
        min_floor_excess,
        max_gram_residual,
        evaluated: config.grid_points + config.samples,
    })
}

/// Random output pair with `<V^(phi)|V^(psi)> = z^N`: `V^(phi)` is uniform
/// on the reduced sphere and `V^(psi) = z^N V^(phi) + sqrt(1 - z^2N) w` for
/// a random unit `w` orthogonal to it.
pub fn sample_gram_preserving_cloner(task: &CloneTask, rng: &mut Rng) -> Result<ClonerResult> {
    let v_phi = random_state(REDUCED_DIM, rng)?;
    let w = loop {
        let r = random_state(REDUCED_DIM, rng)?;
        let ov = v_phi.as_vector().dotc(r.as_vector());
        let w = r.as_vector() - v_phi.as_vector() * ov;
        let n = w.norm();
        if n > 1e-6 {
            break w.unscale(n);
        }
    };
    let gram = task.input_overlap();
    let s = (1.0 - gram.norm_sqr()).max(0.0).sqrt();
    let v_psi = v_phi.as_vector() * gram + w * Complex64::new(s, 0.0);
    ClonerResult::from_outputs(
        task,
        ClonerKind::Sampled,
        PlaneVector::from_coordinates(v_phi.amplitudes())?,
        PlaneVector::from_coordinates(v_psi.as_slice())?,
    )
}

/// Applies `exp(i t H)` for a random Hermitian `H` on the reduced space to
/// both outputs of `base`. The Gram certificate is unchanged.
pub fn perturb_cloner(
    task: &CloneTask,
    base: &ClonerResult,
    t: f64,
    rng: &mut Rng,
) -> Result<ClonerResult> {
    let h = random_hermitian(REDUCED_DIM, rng)?;
    let u = hermitian_exp(&h, t)?;
    let rotate = |v: &PlaneVector| -> Result<PlaneVector> {
        let coords = nalgebra::DVector::from_vec(v.coordinates(REDUCED_DIM));
        if coords.len() != REDUCED_DIM {
            return Err(Error::DimensionMismatch(coords.len(), REDUCED_DIM));
        }
        PlaneVector::from_coordinates((&u * coords).as_slice())
    };
    ClonerResult::from_outputs(
        task,
        ClonerKind::Sampled,
        rotate(&base.v_phi)?,
        rotate(&base.v_psi)?,
    )
}
