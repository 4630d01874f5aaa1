use nalgebra::DVector;
use num_complex::Complex64;

use super::checked_dim;
use crate::{Error, Result};

/// Tolerance on the norm-1 contract of [`StateVector`].
pub const NORM_TOL: f64 = 1e-9;

/// Unit vector of complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amps: DVector<Complex64>,
}

impl StateVector {
    /// Wraps `amps`, which must already have unit norm.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        Self::from_vector(DVector::from_vec(amps))
    }

    pub fn from_vector(amps: DVector<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::InvalidArgument("state of dimension 0".into()));
        }
        let norm = amps.norm();
        if (norm - 1.0).abs() > NORM_TOL || !norm.is_finite() {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amps })
    }

    /// Rescales `amps` to unit norm.
    pub fn normalized(amps: DVector<Complex64>) -> Result<Self> {
        let norm = amps.norm();
        if amps.is_empty() || norm < 1e-300 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            amps: amps.unscale(norm),
        })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    /// Computational basis vector `|index>` of dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut amps = DVector::zeros(dim);
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    pub(crate) fn from_vector_unchecked(amps: DVector<Complex64>) -> Self {
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        self.amps.as_slice()
    }

    pub fn as_vector(&self) -> &DVector<Complex64> {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// Multiplies by the global phase `exp(i theta)`.
    pub fn with_phase(&self, theta: f64) -> Self {
        Self {
            amps: self.amps.scale_complex(Complex64::from_polar(1.0, theta)),
        }
    }

    /// `<self|op|self>` for a Hermitian `op`.
    pub fn expectation(&self, op: &nalgebra::DMatrix<Complex64>) -> Result<f64> {
        if op.nrows() != self.dim() || op.ncols() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), op.nrows()));
        }
        Ok(self.amps.dotc(&(op * &self.amps)).re)
    }
}

trait ScaleComplex {
    fn scale_complex(&self, c: Complex64) -> Self;
}

impl ScaleComplex for DVector<Complex64> {
    fn scale_complex(&self, c: Complex64) -> Self {
        self.map(|a| a * c)
    }
}

/// `<a|b>`, conjugate-linear in `a`.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(a.amps.dotc(&b.amps))
}

/// Kronecker product `|a> (x) |b>`; the index of `|i>|j>` is `i * b.dim() + j`.
pub fn tensor_product(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    checked_dim([a.dim(), b.dim()])?;
    Ok(StateVector {
        amps: a.amps.kronecker(&b.amps),
    })
}

/// `|s>^(x)n`.
pub fn tensor_power(s: &StateVector, n: usize) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("tensor power of order 0".into()));
    }
    checked_dim(std::iter::repeat_n(s.dim(), n))?;
    let mut out = s.amps.clone();
    for _ in 1..n {
        out = out.kronecker(&s.amps);
    }
    Ok(StateVector { amps: out })
}

/// Orthonormal basis `(e1, e2)` of `span{v1, v2}` with `e1 = v1` and
/// `v2 = <e1|v2> e1 + c e2` for a real `c > 0`.
pub fn gram_schmidt_pair(v1: &StateVector, v2: &StateVector) -> Result<(StateVector, StateVector)> {
    let overlap = inner_product(v1, v2)?;
    if overlap.norm() >= 1.0 - 1e-12 {
        return Err(Error::DegeneratePair(format!(
            "collinear inputs (|<v1|v2>| = {})",
            overlap.norm()
        )));
    }
    let residual = &v2.amps - v1.amps.scale_complex(overlap);
    // residual is orthogonal to v1; a second pass removes rounding leakage
    let leak = v1.amps.dotc(&residual);
    let residual = residual - v1.amps.scale_complex(leak);
    let c = residual.norm();
    Ok((
        v1.clone(),
        StateVector::from_vector_unchecked(residual.unscale(c)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn inner_product_examples() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let e1 = StateVector::basis(2, 1).unwrap();
        assert_eq!(inner_product(&e0, &e0).unwrap(), c(1.0));
        assert_eq!(inner_product(&e0, &e1).unwrap(), c(0.0));
        let a = StateVector::from_real(&[0.6, 0.8]).unwrap();
        assert!((inner_product(&a, &e0).unwrap() - c(0.6)).norm() < 1e-15);
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_first_argument() {
        let a = StateVector::new(vec![Complex64::new(0.0, 1.0), c(0.0)]).unwrap();
        let e0 = StateVector::basis(2, 0).unwrap();
        assert_eq!(inner_product(&a, &e0).unwrap(), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = StateVector::basis(2, 0).unwrap();
        let b = StateVector::basis(3, 0).unwrap();
        assert!(matches!(
            inner_product(&a, &b),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }

    #[test]
    fn rejects_unnormalized_amplitudes() {
        assert!(matches!(
            StateVector::from_real(&[1.0, 1.0]),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn tensor_power_of_basis_vector() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let p = tensor_power(&e0, 3).unwrap();
        assert_eq!(p, StateVector::basis(8, 0).unwrap());
    }

    #[test]
    fn tensor_power_matches_explicit_kronecker_expansion() {
        let s = StateVector::from_real(&[0.6, 0.8]).unwrap();
        let p = tensor_power(&s, 2).unwrap();
        // direct expansion: amplitude of |ij> is s_i s_j
        let mut expected = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                expected.push(s.amplitudes()[i] * s.amplitudes()[j]);
            }
        }
        for (got, want) in p.amplitudes().iter().zip(&expected) {
            assert!((got - want).norm() < 1e-15);
        }
        let frozen = [0.36, 0.48, 0.48, 0.64];
        for (got, want) in p.amplitudes().iter().zip(frozen) {
            assert!((got.re - want).abs() < 1e-15);
        }
    }

    #[test]
    fn tensor_power_overlap_law() {
        let phi = StateVector::basis(2, 0).unwrap();
        let psi = StateVector::from_real(&[0.6, 0.8]).unwrap();
        let ov = inner_product(
            &tensor_power(&phi, 2).unwrap(),
            &tensor_power(&psi, 2).unwrap(),
        )
        .unwrap();
        assert!((ov - c(0.36)).norm() < 1e-12);
    }

    #[test]
    fn tensor_power_respects_size_cap() {
        let s = StateVector::basis(2, 0).unwrap();
        assert!(tensor_power(&s, 20).is_ok());
        assert!(matches!(
            tensor_power(&s, 21),
            Err(Error::SizeCapExceeded(_))
        ));
        let big = StateVector::basis(1 << 11, 0).unwrap();
        assert!(matches!(
            tensor_product(&big, &big),
            Err(Error::SizeCapExceeded(_))
        ));
    }

    #[test]
    fn tensor_product_of_basis_vectors() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let p = tensor_product(&e0, &e0).unwrap();
        assert_eq!(p, StateVector::basis(4, 0).unwrap());
        assert!((p.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gram_schmidt_examples() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let e1 = StateVector::basis(2, 1).unwrap();
        let v2 = StateVector::from_real(&[0.6, 0.8]).unwrap();
        let (a, b) = gram_schmidt_pair(&e0, &v2).unwrap();
        assert_eq!(a, e0);
        assert!((b.amplitudes()[0]).norm() < 1e-15);
        assert!((b.amplitudes()[1] - c(1.0)).norm() < 1e-15);

        let (a, b) = gram_schmidt_pair(&e0, &e1).unwrap();
        assert_eq!((a, b), (e0.clone(), e1));

        assert!(matches!(
            gram_schmidt_pair(&v2, &v2),
            Err(Error::DegeneratePair(_))
        ));
        assert!(matches!(
            gram_schmidt_pair(&v2, &v2.with_phase(0.7)),
            Err(Error::DegeneratePair(_))
        ));
    }

    #[test]
    fn gram_schmidt_residual_coefficient_is_positive_real() {
        let v1 = StateVector::new(vec![c(0.6), Complex64::new(0.0, 0.8), c(0.0)]).unwrap();
        let v2 = StateVector::new(vec![
            Complex64::new(0.0, 0.5),
            c(0.5),
            Complex64::new(0.5, 0.5),
        ])
        .unwrap();
        let (e1, e2) = gram_schmidt_pair(&v1, &v2).unwrap();
        assert!(inner_product(&e1, &e2).unwrap().norm() < 1e-12);
        let coeff = inner_product(&e2, &v2).unwrap();
        assert!(coeff.re > 0.0 && coeff.im.abs() < 1e-12);
        let a = inner_product(&e1, &v2).unwrap();
        let rebuilt = e1.as_vector().map(|x| x * a) + e2.as_vector().map(|x| x * coeff);
        assert!((rebuilt - v2.as_vector()).norm() < 1e-12);
    }
}
