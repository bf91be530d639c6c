use super::eigen::hermitian_eigenvalues;
use super::matrix::Matrix4;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix<T> {
    m: Matrix4<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validates Hermiticity and trace against `T::MATRIX_TOL` and positivity
    /// against `T::PSD_TOL`.
    pub fn new(m: Matrix4<T>) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let defect = m.hermitian_defect();
        if defect > T::matrix_tol() {
            return Err(Error::NotHermitian(defect.to_f64_lossy()));
        }
        let tr = m.trace();
        if (tr.re - T::one()).abs() > T::matrix_tol() || tr.im.abs() > T::matrix_tol() {
            return Err(Error::InvalidTrace(tr.re.to_f64_lossy()));
        }
        let min = hermitian_eigenvalues(&m, T::matrix_tol())?[0];
        if min < -T::psd_tol() {
            return Err(Error::NotPsd(min.to_f64_lossy()));
        }
        Ok(Self { m })
    }

    /// Skips validation; callers guarantee the invariants by construction.
    pub(crate) fn new_unchecked(m: Matrix4<T>) -> Self {
        Self { m }
    }

    pub fn maximally_mixed() -> Self {
        Self::new_unchecked(Matrix4::identity().scale(T::lit(0.25)))
    }

    pub fn matrix(&self) -> &Matrix4<T> {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix4<T> {
        self.m
    }

    /// `(self + weight * other) / (1 + weight)` for `weight >= 0`.
    pub fn mix(&self, other: &Self, weight: T) -> Self {
        Self::new_unchecked(mix_matrices(&self.m, &other.m, weight))
    }
}

pub(crate) fn mix_matrices<T: Scalar>(a: &Matrix4<T>, b: &Matrix4<T>, weight: T) -> Matrix4<T> {
    let norm = (T::one() + weight).recip();
    Matrix4::from_fn(|i, j| (a[(i, j)] + b[(i, j)].scale(weight)).scale(norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Complex;

    #[test]
    fn validation_errors() {
        let m = Matrix4::<f64>::identity();
        assert!(matches!(DensityMatrix::new(m), Err(Error::InvalidTrace(t)) if t == 4.0));

        let m = Matrix4::diag([1.2, -0.2, 0.0, 0.0]);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotPsd(_))));

        let mut m = Matrix4::<f64>::identity().scale(0.25);
        m[(0, 3)] = Complex::real(0.1);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn boundary_state_is_accepted() {
        // rank-deficient state with a tiny negative rounding error
        let m = Matrix4::diag([0.5 + 1e-13, 0.5, -1e-13, 0.0]);
        assert!(DensityMatrix::new(m).is_ok());
    }

    #[test]
    fn mixing_with_itself_is_identity_map() {
        let rho = DensityMatrix::<f64>::maximally_mixed();
        assert!(rho.mix(&rho, 3.0).matrix().approx_eq(rho.matrix(), 1e-16));
    }
}
