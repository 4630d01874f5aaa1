//! Seedable sampling of states, projectors, unitaries and density operators.
//!
//! States are normalized vectors of i.i.d. standard complex Gaussians.
//! Unitaries come from the QR decomposition of a complex Gaussian matrix
//! with the phases of `R`'s diagonal moved into `Q`, which makes the result
//! Haar distributed.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng as _, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{DensityOperator, Projector, StateVector};
use crate::{Error, Result};

/// Seeded ChaCha8 generator. Equal seeds (and streams) give equal samples.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub const ALGORITHM: &'static str = "chacha8";

    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream `stream` under the same seed. Used to give every
    /// trial of a parallel suite its own generator.
    pub fn for_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { seed, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn algorithm(&self) -> &'static str {
        Self::ALGORITHM
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.inner.random::<f64>()
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        self.inner.random_range(lo..=hi)
    }

    pub fn gaussian(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    /// Standard complex Gaussian, `E|c|^2 = 1`.
    pub fn complex_gaussian(&mut self) -> Complex64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Complex64::new(self.gaussian() * s, self.gaussian() * s)
    }

    fn gaussian_matrix(&mut self, rows: usize, cols: usize) -> DMatrix<Complex64> {
        DMatrix::from_fn(rows, cols, |_, _| self.complex_gaussian())
    }
}

impl RngCore for Rng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        Err(Error::InvalidArgument("dimension must be positive".into()))
    } else {
        Ok(())
    }
}

pub fn random_state(dim: usize, rng: &mut Rng) -> Result<StateVector> {
    check_dim(dim)?;
    loop {
        let v = nalgebra::DVector::from_fn(dim, |_, _| rng.complex_gaussian());
        if v.norm() > 1e-12 {
            return StateVector::normalized(v);
        }
    }
}

/// Haar-distributed `dim x dim` unitary.
pub fn random_unitary(dim: usize, rng: &mut Rng) -> Result<DMatrix<Complex64>> {
    check_dim(dim)?;
    let g = rng.gaussian_matrix(dim, dim);
    let qr = g.qr();
    let (mut q, r) = qr.unpack();
    for (k, mut col) in q.column_iter_mut().enumerate() {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        col *= phase;
    }
    Ok(q)
}

/// Projector onto the span of the first `rank` columns of a Haar unitary.
pub fn random_projector(dim: usize, rank: usize, rng: &mut Rng) -> Result<Projector> {
    check_dim(dim)?;
    if rank == 0 || rank > dim {
        return Err(Error::InvalidArgument(format!(
            "rank {rank} outside [1, {dim}]"
        )));
    }
    let u = random_unitary(dim, rng)?;
    let cols = u.columns(0, rank);
    let p = cols * cols.adjoint();
    Ok(Projector::from_matrix_unchecked(
        (&p + p.adjoint()).unscale(2.0),
    ))
}

/// `G G^dagger / Tr(G G^dagger)` with `G` a `dim x rank` complex Gaussian.
pub fn random_density_with_rank(dim: usize, rank: usize, rng: &mut Rng) -> Result<DensityOperator> {
    check_dim(dim)?;
    if rank == 0 || rank > dim {
        return Err(Error::InvalidArgument(format!(
            "rank {rank} outside [1, {dim}]"
        )));
    }
    let g = rng.gaussian_matrix(dim, rank);
    let m = &g * g.adjoint();
    let m = (&m + m.adjoint()).unscale(2.0);
    let tr = m.trace().re;
    Ok(DensityOperator::from_matrix_unchecked(m.unscale(tr)))
}

pub fn random_density(dim: usize, rng: &mut Rng) -> Result<DensityOperator> {
    random_density_with_rank(dim, dim, rng)
}

/// `sum_m mu_m |m><m|` over `terms` Haar-random states with uniformly
/// random simplex weights.
pub fn random_mixture(dim: usize, terms: usize, rng: &mut Rng) -> Result<DensityOperator> {
    check_dim(dim)?;
    if terms == 0 {
        return Err(Error::InvalidArgument(
            "mixture needs at least one term".into(),
        ));
    }
    // exponential spacings give a flat Dirichlet
    let raw: Vec<f64> = (0..terms)
        .map(|_| -(1.0 - rng.uniform(0.0, 1.0)).ln())
        .collect();
    let total: f64 = raw.iter().sum();
    let mut acc = DMatrix::zeros(dim, dim);
    for w in raw {
        let s = random_state(dim, rng)?;
        acc += DensityOperator::pure(&s).matrix().scale(w / total);
    }
    Ok(DensityOperator::from_matrix_unchecked(acc))
}

/// GUE-style Hermitian matrix `(G + G^dagger) / 2`.
pub fn random_hermitian(dim: usize, rng: &mut Rng) -> Result<DMatrix<Complex64>> {
    check_dim(dim)?;
    let g = rng.gaussian_matrix(dim, dim);
    Ok((&g + g.adjoint()).unscale(2.0))
}
