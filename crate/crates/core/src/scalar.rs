//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! All state-space math is written against [`Scalar`], implemented for `f32`
//! and `f64`. Tolerances are per-type: the `f64` values are the ones the
//! library contracts are stated in, the `f32` values are loosened to what
//! single precision can actually resolve.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

pub trait Scalar:
    Float + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Tolerance on probability / correlation-vector constraints.
    const STATE_TOL: f64;
    /// Tolerance on Hermiticity and unit trace of density matrices.
    const MATRIX_TOL: f64;
    /// Most negative eigenvalue still accepted as positive semidefinite.
    const PSD_TOL: f64;
    /// Relative off-diagonal Frobenius threshold that stops the Jacobi sweeps.
    const JACOBI_TOL: f64;
    /// Feasibility tolerance used inside the PPT bisections.
    const PPT_TOL: f64;

    /// Converts an `f64` literal. Panics only if the value is not representable,
    /// which cannot happen for finite inputs with the provided impls.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    #[inline]
    fn state_tol() -> Self {
        Self::lit(Self::STATE_TOL)
    }

    #[inline]
    fn matrix_tol() -> Self {
        Self::lit(Self::MATRIX_TOL)
    }

    #[inline]
    fn psd_tol() -> Self {
        Self::lit(Self::PSD_TOL)
    }

    #[inline]
    fn ppt_tol() -> Self {
        Self::lit(Self::PPT_TOL)
    }
}

impl Scalar for f64 {
    const STATE_TOL: f64 = 1e-12;
    const MATRIX_TOL: f64 = 1e-12;
    const PSD_TOL: f64 = 1e-10;
    const JACOBI_TOL: f64 = 1e-14;
    const PPT_TOL: f64 = 1e-12;
}

impl Scalar for f32 {
    const STATE_TOL: f64 = 1e-5;
    const MATRIX_TOL: f64 = 1e-5;
    const PSD_TOL: f64 = 1e-5;
    const JACOBI_TOL: f64 = 1e-6;
    const PPT_TOL: f64 = 1e-5;
}
