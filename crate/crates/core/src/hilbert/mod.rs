//! Dense finite-dimensional Hilbert-space arithmetic.
//!
//! Everything here works on `nalgebra` dense vectors and matrices of
//! `Complex64`. Full tensor representations are limited to [`SIZE_CAP`]
//! amplitudes; larger problems have to be handled in reduced coordinates
//! (see [`crate::cloner::PlaneVector`]).

mod operator;
mod random;
mod state;

pub use operator::{
    hermitian_exp, is_hermitian, local_expectation, matrix_sqrt_psd, max_abs_diff, partial_trace,
    psd_support_factor, unitarity_residual, DensityOperator, Projector, Subsystem,
};
pub use random::{
    random_density, random_density_with_rank, random_hermitian, random_mixture, random_projector,
    random_state, random_unitary, Rng,
};
pub use state::{
    gram_schmidt_pair, inner_product, tensor_power, tensor_product, StateVector, NORM_TOL,
};

pub use num_complex::Complex64;

/// Largest total dimension allowed for a full tensor representation.
pub const SIZE_CAP: usize = 1 << 20;

/// Tolerance used for Hermiticity, idempotency, trace and PSD checks.
pub const OPERATOR_TOL: f64 = 1e-9;

pub(crate) fn checked_dim(factors: impl IntoIterator<Item = usize>) -> crate::Result<usize> {
    let mut total: usize = 1;
    for f in factors {
        total = total
            .checked_mul(f)
            .filter(|&t| t <= SIZE_CAP)
            .ok_or(crate::Error::SizeCapExceeded(total.saturating_mul(f)))?;
    }
    Ok(total)
}
