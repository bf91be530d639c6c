//! Closed-form entanglement measures of Bell-diagonal states.
//!
//! Everything here follows from one quantity, the level `L = ‖t‖₁`. A state
//! is entangled iff `L > 1`, and then
//!
//! * concurrence `C = (L - 1) / 2 = 2 max_k p_k - 1`,
//! * robustness of entanglement `s = C`, realized by mixing with the
//!   separable state at `t″ = -t / L`, which drives the state onto the
//!   octahedron face at `t′ = t / L`,
//! * random robustness (mixer `I/4`) `s₀ = L - 1 = 2C`.
//!
//! Note on sign: the singlet-corner formula is sometimes written
//! `s = (1 + t1 + t2 + t3) / 2`, which is negative inside that corner. The
//! magnitude `(‖t‖₁ - 1) / 2` used here is region-symmetric and agrees with
//! it up to sign.

use crate::bd::{classify, density_matrix, BdState, Region, TVector};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, spin_flip, sqrt_psd, DensityMatrix, Matrix4};
use crate::scalar::Scalar;

/// Robustness value together with the optimal separable pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobustnessCertificate<T> {
    /// Robustness of entanglement.
    pub s: T,
    pub region: Region,
    /// `‖t‖₁`; the state lies on the plane `v_k·x = L` of its region.
    pub level: T,
    /// Point where the line through the state and the origin leaves the
    /// octahedron: the separable state `(ρ + sρ″)/(1+s)`.
    pub t_prime: TVector<T>,
    /// Optimal separable mixer, on the opposite octahedron face.
    pub t_double_prime: TVector<T>,
}

impl<T: Scalar> RobustnessCertificate<T> {
    pub fn prime_state(&self) -> BdState<T> {
        BdState::from_tvec(self.t_prime.components()).expect("octahedron point")
    }

    pub fn double_prime_state(&self) -> BdState<T> {
        BdState::from_tvec(self.t_double_prime.components()).expect("octahedron point")
    }
}

/// `(L - 1) / 2` for entangled states, exactly zero for separable ones.
fn excess<T: Scalar>(s: &BdState<T>) -> T {
    match classify(s) {
        Region::Separable => T::zero(),
        Region::Entangled(_) => (s.level() - T::one()) * T::lit(0.5),
    }
}

pub fn concurrence<T: Scalar>(s: &BdState<T>) -> T {
    excess(s)
}

/// Wootters concurrence of an arbitrary two-qubit state:
/// `max(0, λ1 - λ2 - λ3 - λ4)` with `λ_i` the descending square roots of the
/// spectrum of `√ρ ρ̃ √ρ`.
pub fn concurrence_wootters<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    let tol = T::psd_tol();
    let root = sqrt_psd(rho.matrix(), tol)?;
    let flipped = spin_flip(rho);
    let r = root * flipped * root;
    let r = (r + r.adjoint()).scale(T::lit(0.5));
    let eig = hermitian_eigenvalues(&r, T::matrix_tol())?;
    if eig[0] < -tol {
        return Err(Error::NotPsd(eig[0].to_f64_lossy()));
    }
    let [l4, l3, l2, l1] = eig.map(|x| x.max(T::zero()).sqrt());
    Ok((l1 - l2 - l3 - l4).max(T::zero()))
}

pub fn robustness<T: Scalar>(s: &BdState<T>) -> RobustnessCertificate<T> {
    let region = classify(s);
    let level = s.level();
    let t = s.t();
    match region {
        Region::Separable => RobustnessCertificate {
            s: T::zero(),
            region,
            level,
            t_prime: *s.tvec(),
            t_double_prime: *s.tvec(),
        },
        Region::Entangled(_) => {
            let prime = t.map(|x| x / level);
            let double_prime = prime.map(|x| -x);
            RobustnessCertificate {
                s: excess(s),
                region,
                level,
                t_prime: TVector::new(prime).expect("t/L lies in the octahedron"),
                t_double_prime: TVector::new(double_prime).expect("-t/L lies in the octahedron"),
            }
        }
    }
}

/// `(ρ′, ρ″)`: the boundary state reached and the optimal separable mixer.
pub fn optimal_separable_matrices<T: Scalar>(
    s: &BdState<T>,
) -> Result<(DensityMatrix<T>, DensityMatrix<T>)> {
    let cert = robustness(s);
    if cert.region == Region::Separable {
        return Err(Error::NotEntangled);
    }
    Ok((
        density_matrix(&cert.prime_state()),
        density_matrix(&cert.double_prime_state()),
    ))
}

/// Robustness relative to the maximally mixed state `I/4`.
pub fn random_robustness<T: Scalar>(s: &BdState<T>) -> T {
    T::lit(2.0) * excess(s)
}

/// `‖(1+s)ρ′ − ρ − sρ″‖_max` for a certificate; zero up to rounding.
pub fn mixing_residual<T: Scalar>(s: &BdState<T>, cert: &RobustnessCertificate<T>) -> T {
    let rho = density_matrix(s).into_matrix();
    let prime = density_matrix(&cert.prime_state()).into_matrix();
    let double_prime = density_matrix(&cert.double_prime_state()).into_matrix();
    let lhs = prime.scale(T::one() + cert.s);
    let rhs: Matrix4<T> = rho + double_prime.scale(cert.s);
    lhs.max_abs_diff(&rhs)
}
