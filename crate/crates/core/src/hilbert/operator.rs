use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use super::{checked_dim, StateVector, OPERATOR_TOL};
use crate::{Error, Result};

/// Largest entry-wise modulus of `a - b`.
pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn hermiticity_deviation(m: &DMatrix<Complex64>) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

pub fn is_hermitian(m: &DMatrix<Complex64>, tol: f64) -> bool {
    m.is_square() && hermiticity_deviation(m) <= tol
}

/// Max-entry deviation of `U^dagger U` from the identity.
pub fn unitarity_residual(u: &DMatrix<Complex64>) -> f64 {
    let id = DMatrix::identity(u.nrows(), u.ncols());
    max_abs_diff(&(u.adjoint() * u), &id)
}

fn check_square(m: &DMatrix<Complex64>) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(m.nrows(), m.ncols()))
    }
}

fn hermitian_eigen(m: &DMatrix<Complex64>) -> Result<SymmetricEigen<Complex64, nalgebra::Dyn>> {
    check_square(m)?;
    let dev = hermiticity_deviation(m);
    if dev > OPERATOR_TOL {
        return Err(Error::NotHermitian(dev));
    }
    let sym = (m + m.adjoint()).unscale(2.0);
    Ok(SymmetricEigen::new(sym))
}

fn from_eigen(
    eig: &SymmetricEigen<Complex64, nalgebra::Dyn>,
    f: impl Fn(f64) -> Complex64,
) -> DMatrix<Complex64> {
    let v = &eig.eigenvectors;
    let d = DMatrix::from_diagonal(&DVector::from_iterator(
        eig.eigenvalues.len(),
        eig.eigenvalues.iter().map(|&l| f(l)),
    ));
    v * d * v.adjoint()
}

/// Principal square root of a Hermitian positive semidefinite matrix.
///
/// Eigenvalues in `[-1e-9, 0)` are treated as zero; anything more negative
/// is rejected.
pub fn matrix_sqrt_psd(m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let eig = hermitian_eigen(m)?;
    let min = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if min < -OPERATOR_TOL {
        return Err(Error::NotPositive(min));
    }
    Ok(from_eigen(&eig, |l| Complex64::new(l.max(0.0).sqrt(), 0.0)))
}

/// Factor `A` with `A A^dagger = m` for a Hermitian positive semidefinite
/// `m`, keeping one column per eigenvalue above the rounding floor
/// `16 * dim * eps * max eigenvalue`. Eigenvalues below the floor are
/// indistinguishable from zero and are dropped rather than square-rooted.
pub fn psd_support_factor(m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let eig = hermitian_eigen(m)?;
    let min = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if min < -OPERATOR_TOL {
        return Err(Error::NotPositive(min));
    }
    let max = eig.eigenvalues.iter().copied().fold(0.0, f64::max);
    let floor = 16.0 * m.nrows() as f64 * f64::EPSILON * max;
    let keep: Vec<usize> = (0..eig.eigenvalues.len())
        .filter(|&k| eig.eigenvalues[k] > floor)
        .collect();
    let mut a = DMatrix::zeros(m.nrows(), keep.len().max(1));
    for (c, &k) in keep.iter().enumerate() {
        let s = eig.eigenvalues[k].sqrt();
        a.set_column(c, &eig.eigenvectors.column(k).scale(s));
    }
    Ok(a)
}

/// `exp(i t H)` for a Hermitian `H`.
pub fn hermitian_exp(h: &DMatrix<Complex64>, t: f64) -> Result<DMatrix<Complex64>> {
    let eig = hermitian_eigen(h)?;
    Ok(from_eigen(&eig, |l| Complex64::from_polar(1.0, t * l)))
}

/// `<v| 1 (x) .. (x) op_slot (x) .. (x) 1 |v>` for a register of `sites`
/// subsystems of dimension `op.nrows()` each.
pub fn local_expectation(
    v: &StateVector,
    op: &DMatrix<Complex64>,
    slot: usize,
    sites: usize,
) -> Result<f64> {
    check_square(op)?;
    let d = op.nrows();
    if slot >= sites {
        return Err(Error::InvalidArgument(format!(
            "slot {slot} out of range for {sites} sites"
        )));
    }
    let total = checked_dim(std::iter::repeat_n(d, sites))?;
    if total != v.dim() {
        return Err(Error::DimensionMismatch(v.dim(), total));
    }
    let low = d.pow((sites - 1 - slot) as u32);
    let high = total / (low * d);
    let amps = v.amplitudes();
    let mut acc = Complex64::new(0.0, 0.0);
    for h in 0..high {
        for l in 0..low {
            let at = |k: usize| (h * d + k) * low + l;
            for a in 0..d {
                let mut row = Complex64::new(0.0, 0.0);
                for b in 0..d {
                    row += op[(a, b)] * amps[at(b)];
                }
                acc += amps[at(a)].conj() * row;
            }
        }
    }
    Ok(acc.re)
}

/// Density operator: Hermitian, PSD, unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    matrix: DMatrix<Complex64>,
}

impl DensityOperator {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        let eig = hermitian_eigen(&matrix)?;
        let min = eig
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if min < -OPERATOR_TOL {
            return Err(Error::NotPositive(min));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > OPERATOR_TOL || tr.im.abs() > OPERATOR_TOL {
            return Err(Error::InvalidTrace(tr.re));
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: DMatrix<Complex64>) -> Self {
        Self { matrix }
    }

    /// `|s><s|`.
    pub fn pure(s: &StateVector) -> Self {
        let v = s.as_vector();
        Self {
            matrix: v * v.adjoint(),
        }
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension 0".into()));
        }
        Ok(Self {
            matrix: DMatrix::identity(dim, dim).unscale(dim as f64),
        })
    }

    /// Convex combination `sum_m w_m rho_m`.
    pub fn mixture(terms: &[(f64, DensityOperator)]) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidArgument("empty mixture".into()));
        };
        let dim = first.dim();
        let mut acc = DMatrix::zeros(dim, dim);
        for (w, rho) in terms {
            if rho.dim() != dim {
                return Err(Error::DimensionMismatch(dim, rho.dim()));
            }
            if *w < 0.0 {
                return Err(Error::InvalidArgument(format!("negative weight {w}")));
            }
            acc += rho.matrix.scale(*w);
        }
        Self::new(acc)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// `Tr(P rho)`.
    pub fn probability(&self, p: &Projector) -> Result<f64> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch(p.dim(), self.dim()));
        }
        Ok((p.matrix() * &self.matrix).trace().re)
    }

    pub fn tensor(&self, other: &DensityOperator) -> Result<Self> {
        checked_dim([self.dim(), other.dim()])?;
        Ok(Self {
            matrix: self.matrix.kronecker(&other.matrix),
        })
    }

    /// `U rho U^dagger`.
    pub fn evolve(&self, u: &DMatrix<Complex64>) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), u.nrows()));
        }
        Ok(Self {
            matrix: u * &self.matrix * u.adjoint(),
        })
    }

    /// Checks the Hermitian / PSD / unit-trace invariants at `OPERATOR_TOL`.
    pub fn validate(&self) -> Result<()> {
        Self::new(self.matrix.clone()).map(|_| ())
    }
}

/// Orthogonal projector: Hermitian and idempotent.
#[derive(Clone, Debug, PartialEq)]
pub struct Projector {
    matrix: DMatrix<Complex64>,
}

impl Projector {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self> {
        check_square(&matrix)?;
        let dev = hermiticity_deviation(&matrix);
        if dev > OPERATOR_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let idem = max_abs_diff(&(&matrix * &matrix), &matrix);
        if idem > OPERATOR_TOL {
            return Err(Error::NotIdempotent(idem));
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: DMatrix<Complex64>) -> Self {
        Self { matrix }
    }

    /// `|s><s|`.
    pub fn rank_one(s: &StateVector) -> Self {
        let v = s.as_vector();
        Self {
            matrix: v * v.adjoint(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: DMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn rank(&self) -> usize {
        self.matrix.trace().re.round() as usize
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// `<s|P|s>`.
    pub fn probability(&self, s: &StateVector) -> Result<f64> {
        s.expectation(&self.matrix)
    }

    /// `P (x) 1_extra`.
    pub fn extend(&self, extra: usize) -> Result<Self> {
        checked_dim([self.dim(), extra])?;
        Ok(Self {
            matrix: self.matrix.kronecker(&DMatrix::identity(extra, extra)),
        })
    }
}

/// Which factor of a bipartite space to keep in [`partial_trace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Traces out one factor of `rho` acting on `C^dA (x) C^dB`.
pub fn partial_trace(
    rho: &DensityOperator,
    dims: (usize, usize),
    keep: Subsystem,
) -> Result<DensityOperator> {
    let (da, db) = dims;
    if da == 0 || db == 0 || da * db != rho.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), da * db));
    }
    let m = rho.matrix();
    let out = match keep {
        Subsystem::A => DMatrix::from_fn(da, da, |i, k| {
            (0..db).map(|j| m[(i * db + j, k * db + j)]).sum()
        }),
        Subsystem::B => DMatrix::from_fn(db, db, |j, l| {
            (0..da).map(|i| m[(i * db + j, i * db + l)]).sum()
        }),
    };
    Ok(DensityOperator::from_matrix_unchecked(out))
}
