use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    ae_lower_bound, ae_symmetric, angle_form, f_rel_diff, re_lower_bound, re_symmetric,
};
use crate::cloner::{
    asymmetric_cloner, brute_force_min_re_with, canonical_plane, error_report_full,
    ideal_angle_floor, measurement_deviation_checks, mixed_machine_report, perturb_cloner,
    sample_gram_preserving_cloner, split_cloner, symmetric_cloner, BruteForceConfig, CloneTask,
    ClonerResult, MachineEnsemble, PairMember, PreparedPair,
};
use crate::error::invalid;
use crate::geometry::{
    evolved_projector_check, mixed_probability_bound_check, projector_deviation_check,
    spherical_triangle_check, transition_probability_check, uhlmann_fidelity, InequalityCheck,
    CHECK_TOL,
};
use crate::hilbert::{
    inner_product, random_density, random_density_with_rank, random_mixture, random_projector,
    random_state, random_unitary, DensityOperator, Rng, StateVector,
};
use crate::{Error, Result};

/// Largest single-particle dimension sampled when no dimension is fixed.
pub const MAX_DIM: usize = 8;
/// Each brute-force trial scans 2000 cloners, so its trial count is capped.
pub const BRUTE_FORCE_TRIAL_CAP: usize = 1000;
/// Tolerance of the two-path curve comparison.
pub const TWO_PATH_TOL: f64 = 1e-10;

/// Groups of sub-suites selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Angles,
    Fidelity,
    Transition,
    Cloners,
    Bounds,
    Mixed,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Angles,
        Suite::Fidelity,
        Suite::Transition,
        Suite::Cloners,
        Suite::Bounds,
        Suite::Mixed,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Angles => "angles",
            Suite::Fidelity => "fidelity",
            Suite::Transition => "transition",
            Suite::Cloners => "cloners",
            Suite::Bounds => "bounds",
            Suite::Mixed => "mixed",
            Suite::All => "all",
        }
    }

    pub fn checks(self) -> Vec<Check> {
        use Check::*;
        match self {
            Suite::Angles => vec![ProjectorDeviation, SphericalTriangle],
            Suite::Fidelity => vec![MixedProbability, FidelityConsistency],
            Suite::Transition => vec![TransitionProbability],
            Suite::Cloners => vec![ClonerInvariants, MeasurementDeviation, BruteForce],
            Suite::Bounds => vec![BoundDominance, TwoPath],
            Suite::Mixed => vec![MixedMachine],
            Suite::All => Check::ALL.to_vec(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map_or_else(|| invalid(format!("unknown suite '{s}'")), Ok)
    }
}

/// One randomized property check; each produces its own [`SuiteReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    ProjectorDeviation,
    SphericalTriangle,
    MixedProbability,
    FidelityConsistency,
    TransitionProbability,
    ClonerInvariants,
    MeasurementDeviation,
    BruteForce,
    BoundDominance,
    TwoPath,
    MixedMachine,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::ProjectorDeviation,
        Check::SphericalTriangle,
        Check::MixedProbability,
        Check::FidelityConsistency,
        Check::TransitionProbability,
        Check::ClonerInvariants,
        Check::MeasurementDeviation,
        Check::BruteForce,
        Check::BoundDominance,
        Check::TwoPath,
        Check::MixedMachine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ProjectorDeviation => "projector-deviation",
            Check::SphericalTriangle => "spherical-triangle",
            Check::MixedProbability => "mixed-probability",
            Check::FidelityConsistency => "fidelity-consistency",
            Check::TransitionProbability => "transition-probability",
            Check::ClonerInvariants => "cloner-invariants",
            Check::MeasurementDeviation => "measurement-deviation",
            Check::BruteForce => "brute-force",
            Check::BoundDominance => "bound-dominance",
            Check::TwoPath => "two-path",
            Check::MixedMachine => "mixed-machine",
        }
    }

    pub fn tolerance(self) -> f64 {
        match self {
            Check::TwoPath => TWO_PATH_TOL,
            _ => CHECK_TOL,
        }
    }

    /// Trials actually run when `requested` are asked for.
    pub fn trial_count(self, requested: usize) -> usize {
        match self {
            Check::BruteForce => requested.min(BRUTE_FORCE_TRIAL_CAP),
            _ => requested,
        }
    }

    fn index(self) -> u64 {
        Check::ALL.iter().position(|c| *c == self).unwrap() as u64
    }

    /// Checks of a single trial, drawn from `rng`.
    pub fn trial(self, rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
        match self {
            Check::ProjectorDeviation => projector_deviation_trial(rng, dim),
            Check::SphericalTriangle => triangle_trial(rng, dim),
            Check::MixedProbability => mixed_probability_trial(rng, dim),
            Check::FidelityConsistency => fidelity_trial(rng, dim),
            Check::TransitionProbability => transition_trial(rng, dim),
            Check::ClonerInvariants => cloner_trial(rng, dim),
            Check::MeasurementDeviation => measurement_trial(rng, dim),
            Check::BruteForce => brute_force_trial(rng),
            Check::BoundDominance => dominance_trial(rng),
            Check::TwoPath => two_path_trial(rng),
            Check::MixedMachine => mixed_machine_trial(rng, dim),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifySpec {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    /// Fixed single-particle dimension; random in `[2, 8]` when absent.
    pub dim: Option<usize>,
}

/// Aggregated outcome of one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    /// Trials whose worst margin is below `-tolerance`.
    pub failures: usize,
    /// Smallest `rhs - lhs` over all trials.
    pub worst_margin: f64,
    pub seed: u64,
    pub tolerance: f64,
    /// Seconds; left out of the JSON so reports stay bit-identical.
    #[serde(skip)]
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs one check with `trials` independent trials. Trial `i` draws from
/// its own stream, so the report does not depend on scheduling.
pub fn run_check(
    check: Check,
    trials: usize,
    seed: u64,
    dim: Option<usize>,
) -> Result<SuiteReport> {
    if trials == 0 {
        return invalid("trials must be at least 1");
    }
    if let Some(d) = dim {
        if !(2..=MAX_DIM).contains(&d) {
            return invalid(format!("dimension must be in [2, {MAX_DIM}], got {d}"));
        }
    }
    let start = Instant::now();
    let count = check.trial_count(trials);
    let tol = check.tolerance();
    let margins = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = Rng::for_stream(seed, (check.index() << 40) | i);
            let checks = check.trial(&mut rng, dim)?;
            Ok(checks
                .iter()
                .map(|c| {
                    if c.margin.is_nan() {
                        f64::NEG_INFINITY
                    } else {
                        c.margin
                    }
                })
                .fold(f64::INFINITY, f64::min))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(SuiteReport {
        suite: check.name().to_string(),
        trials: count,
        failures: margins.iter().filter(|m| **m < -tol).count(),
        worst_margin: margins.iter().copied().fold(f64::INFINITY, f64::min),
        seed,
        tolerance: tol,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// Runs every check of the suite, optionally writing the reports as a JSON
/// array to `report`.
pub fn cmd_verify(spec: &VerifySpec, report: Option<&Path>) -> Result<Vec<SuiteReport>> {
    let reports = spec
        .suite
        .checks()
        .into_iter()
        .map(|c| run_check(c, spec.trials, spec.seed, spec.dim))
        .collect::<Result<Vec<_>>>()?;
    if let Some(path) = report {
        std::fs::write(path, reports_json(&reports)?)?;
    }
    Ok(reports)
}

pub fn reports_json(reports: &[SuiteReport]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(reports)?;
    s.push('\n');
    Ok(s)
}

fn pick_dim(rng: &mut Rng, dim: Option<usize>) -> usize {
    dim.unwrap_or_else(|| rng.int_inclusive(2, MAX_DIM))
}

fn random_rank_projector(dim: usize, rng: &mut Rng) -> Result<crate::hilbert::Projector> {
    let rank = rng.int_inclusive(1, dim);
    random_projector(dim, rank, rng)
}

/// Random state at a random overlap with `a`, spread over the whole range
/// including near-parallel pairs.
fn nearby_state(a: &StateVector, rng: &mut Rng) -> Result<StateVector> {
    let b = random_state(a.dim(), rng)?;
    let t = rng.uniform(0.0, 1.0);
    StateVector::normalized(a.as_vector().scale(1.0 - t) + b.as_vector().scale(t)).or(Ok(b))
}

fn projector_deviation_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    let d = pick_dim(rng, dim);
    let a = random_state(d, rng)?;
    let b = nearby_state(&a, rng)?;
    let p = random_rank_projector(d, rng)?;
    Ok(vec![projector_deviation_check(&a, &b, &p)?])
}

fn triangle_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    let d = pick_dim(rng, dim);
    let x = random_state(d, rng)?;
    let y = nearby_state(&x, rng)?;
    let z = nearby_state(&y, rng)?;
    Ok(vec![spherical_triangle_check(&x, &y, &z)?])
}

fn random_density_any(d: usize, rng: &mut Rng) -> Result<DensityOperator> {
    match rng.int_inclusive(0, 2) {
        0 => random_density(d, rng),
        1 => {
            let rank = rng.int_inclusive(1, d);
            random_density_with_rank(d, rank, rng)
        }
        _ => {
            let terms = rng.int_inclusive(1, 4);
            random_mixture(d, terms, rng)
        }
    }
}

fn mixed_probability_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    let d = pick_dim(rng, dim);
    let chi = random_density_any(d, rng)?;
    let omega = random_density_any(d, rng)?;
    let p = random_rank_projector(d, rng)?;
    Ok(vec![mixed_probability_bound_check(&chi, &omega, &p)?])
}

fn fidelity_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    let d = pick_dim(rng, dim);
    let chi = random_density(d, rng)?;
    let omega = random_density_any(d, rng)?;
    let f1 = uhlmann_fidelity(&chi, &omega)?;
    let f2 = uhlmann_fidelity(&omega, &chi)?;
    // a pure state against a full-rank one: F = <a|omega|a>
    let a = random_state(d, rng)?;
    let fa = uhlmann_fidelity(&DensityOperator::pure(&a), &chi)?;
    Ok(vec![
        InequalityCheck::equality(f1, f2, CHECK_TOL),
        InequalityCheck::new(0.0, f1),
        InequalityCheck::new(f1, 1.0),
        InequalityCheck::equality(fa, a.expectation(chi.matrix())?, CHECK_TOL),
        InequalityCheck::new(uhlmann_fidelity(&chi, &chi)?, 1.0),
        InequalityCheck::new(1.0, uhlmann_fidelity(&chi, &chi)?),
    ])
}

fn transition_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    // the joint system-ancilla space stays within MAX_DIM unless a
    // dimension is forced
    let (ds, da) = match dim {
        Some(d) => (d, rng.int_inclusive(1, 2)),
        None => {
            let ds = rng.int_inclusive(2, 4);
            (ds, rng.int_inclusive(1, MAX_DIM / ds))
        }
    };
    let phi = random_state(ds, rng)?;
    let psi = nearby_state(&phi, rng)?;
    let ancilla = if da == 1 {
        DensityOperator::pure(&StateVector::basis(1, 0)?)
    } else {
        // ancilla mixtures of at most four pure terms
        let terms = rng.int_inclusive(1, 4);
        random_mixture(da, terms, rng)?
    };
    let u = random_unitary(ds * da, rng)?;
    let target = random_state(ds, rng)?;
    let p = random_rank_projector(ds, rng)?;
    Ok(vec![
        transition_probability_check(&phi, &psi, &ancilla, &u, &target)?,
        evolved_projector_check(&phi, &psi, &ancilla, &u, &p)?,
    ])
}

/// Random task with `z` in `[0.05, 0.95]` and `1 <= N < L <= l_max`.
fn random_task(rng: &mut Rng, dim: usize, l_max: usize) -> Result<CloneTask> {
    let z = rng.uniform(0.05, 0.95);
    let l = rng.int_inclusive(2, l_max);
    let n = rng.int_inclusive(1, l - 1);
    CloneTask::new(PreparedPair::random_with_overlap(z, dim, rng)?, n, l)
}

fn cloner_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    let d = dim.unwrap_or_else(|| rng.int_inclusive(2, 3));
    let task = random_task(rng, d, 6)?;
    let frame = canonical_plane(&task)?;
    let floor = ideal_angle_floor(&task).radians();
    let (z, n, l) = (task.z(), task.n(), task.l());
    let sym = symmetric_cloner(&task)?;
    let asym_phi = asymmetric_cloner(&task, PairMember::Phi)?;
    let asym_psi = asymmetric_cloner(&task, PairMember::Psi)?;
    let split = split_cloner(&task, rng.uniform(0.0, floor))?;
    let mut checks = vec![
        InequalityCheck::equality(asym_phi.errors.re, re_lower_bound(z, n, l)?, CHECK_TOL),
        InequalityCheck::equality(asym_psi.errors.re, re_lower_bound(z, n, l)?, CHECK_TOL),
        InequalityCheck::equality(asym_phi.errors.ae, ae_lower_bound(z, n, l)?, CHECK_TOL),
        InequalityCheck::equality(sym.errors.re, re_symmetric(z, n, l)?, CHECK_TOL),
        InequalityCheck::equality(sym.errors.ae, ae_symmetric(z, n, l)?, CHECK_TOL),
    ];
    for c in [&sym, &asym_phi, &asym_psi, &split] {
        checks.push(InequalityCheck::new(c.gram_residual(&task), 0.0));
        checks.push(InequalityCheck::new(c.coplanarity_residual(), 0.0));
        checks.push(InequalityCheck::equality(c.angle_sum(), floor, CHECK_TOL));
        checks.push(InequalityCheck::new(re_lower_bound(z, n, l)?, c.errors.re));
        // the same certificate and errors on the full L-particle outputs
        let v_phi = frame.embed(&c.v_phi)?;
        let v_psi = frame.embed(&c.v_psi)?;
        let gram = inner_product(&v_phi, &v_psi)?;
        checks.push(InequalityCheck::new(
            (gram - task.input_overlap()).norm(),
            0.0,
        ));
        let full = error_report_full(&task, &v_phi, &v_psi)?;
        checks.push(InequalityCheck::equality(full.re, c.errors.re, CHECK_TOL));
    }
    Ok(checks)
}

fn measurement_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    let d = dim.unwrap_or(2);
    // keep d^L at most 2^12
    let l_max = (12.0 / (d as f64).log2()).floor() as usize;
    let task = random_task(rng, d, l_max.clamp(2, 10))?;
    let frame = canonical_plane(&task)?;
    let floor = ideal_angle_floor(&task).radians();
    let cloner = match rng.int_inclusive(0, 3) {
        0 => symmetric_cloner(&task)?,
        1 => asymmetric_cloner(&task, PairMember::Phi)?,
        2 => asymmetric_cloner(&task, PairMember::Psi)?,
        _ => split_cloner(&task, rng.uniform(0.0, floor))?,
    };
    let p = random_projector(d, rng.int_inclusive(1, d - 1), rng)?;
    measurement_deviation_checks(&task, &frame, &cloner, &p)
}

fn brute_force_trial(rng: &mut Rng) -> Result<Vec<InequalityCheck>> {
    let task = random_task(rng, 2, 6)?;
    let config = BruteForceConfig {
        seed: rand::RngCore::next_u64(rng),
        ..BruteForceConfig::default()
    };
    let res = brute_force_min_re_with(&task, &config)?;
    let f = re_lower_bound(task.z(), task.n(), task.l())?;
    Ok(vec![
        InequalityCheck::new(f, res.min_re),
        InequalityCheck::equality(res.grid_min_re, f, CHECK_TOL),
        InequalityCheck::new(0.0, res.min_floor_excess),
        InequalityCheck::new(res.max_gram_residual, 0.0),
    ])
}

fn random_bound_args(rng: &mut Rng, z_lo: f64, z_hi: f64) -> (f64, usize, usize) {
    let z = rng.uniform(z_lo, z_hi);
    let n = rng.int_inclusive(1, 8);
    let l = rng.int_inclusive(n + 1, n + 16);
    (z, n, l)
}

fn dominance_trial(rng: &mut Rng) -> Result<Vec<InequalityCheck>> {
    let (z, n, l) = random_bound_args(rng, 0.0, 1.0);
    let f = re_lower_bound(z, n, l)?;
    let mut checks = vec![
        InequalityCheck::new(f, re_symmetric(z, n, l)?),
        InequalityCheck::new(ae_lower_bound(z, n, l)?, ae_symmetric(z, n, l)?),
        InequalityCheck::new(f, z.powi(n as i32)),
        InequalityCheck::new(0.0, f),
    ];
    if f >= 1e-12 {
        checks.push(InequalityCheck::new(0.0, f_rel_diff(z, n, l)?));
    }
    Ok(checks)
}

fn two_path_trial(rng: &mut Rng) -> Result<Vec<InequalityCheck>> {
    let (z, n, l) = random_bound_args(rng, 0.0, 1.0 - 1e-6);
    let pairs = [
        (
            re_lower_bound(z, n, l)?,
            angle_form::re_lower_bound(z, n, l)?,
        ),
        (
            ae_lower_bound(z, n, l)?,
            angle_form::ae_lower_bound(z, n, l)?,
        ),
        (re_symmetric(z, n, l)?, angle_form::re_symmetric(z, n, l)?),
        (ae_symmetric(z, n, l)?, angle_form::ae_symmetric(z, n, l)?),
    ];
    let mut checks: Vec<_> = pairs
        .iter()
        .map(|(a, b)| InequalityCheck::equality(*a, *b, TWO_PATH_TOL))
        .collect();
    if re_lower_bound(z, n, l)? >= 1e-12 {
        checks.push(InequalityCheck::equality(
            f_rel_diff(z, n, l)?,
            angle_form::f_rel_diff(z, n, l)?,
            TWO_PATH_TOL,
        ));
    }
    Ok(checks)
}

/// One member of a random machine ensemble: a floor-saturating split, a
/// sampled over-floor cloner, or a perturbed split.
fn random_member(task: &CloneTask, rng: &mut Rng) -> Result<ClonerResult> {
    let floor = ideal_angle_floor(task).radians();
    match rng.int_inclusive(0, 2) {
        0 => split_cloner(task, rng.uniform(0.0, floor)),
        1 => sample_gram_preserving_cloner(task, rng),
        _ => {
            let base = split_cloner(task, rng.uniform(0.0, floor))?;
            let t = rng.uniform(0.0, 0.3);
            perturb_cloner(task, &base, t, rng)
        }
    }
}

fn mixed_machine_trial(rng: &mut Rng, dim: Option<usize>) -> Result<Vec<InequalityCheck>> {
    let d = dim.unwrap_or(2);
    let task = random_task(rng, d, 6)?;
    let members = (0..3)
        .map(|_| random_member(&task, rng))
        .collect::<Result<Vec<_>>>()?;
    let raw: Vec<f64> = (0..3)
        .map(|_| -(1.0 - rng.uniform(0.0, 1.0)).ln())
        .collect();
    let total: f64 = raw.iter().sum();
    let mut weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    // absorb rounding so the weights sum to one exactly enough
    let rest: f64 = weights[1..].iter().sum();
    weights[0] = 1.0 - rest;
    let report = mixed_machine_report(&MachineEnsemble::new(weights, members)?)?;
    let (z, n, l) = (task.z(), task.n(), task.l());
    Ok(vec![
        InequalityCheck::new(re_lower_bound(z, n, l)?, report.re),
        InequalityCheck::new(ae_lower_bound(z, n, l)?, report.ae),
    ])
}
