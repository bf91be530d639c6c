//! Numerical certification of the closed forms.
//!
//! For two qubits, PPT is equivalent to separability, so "is this mixture
//! separable?" reduces to the sign of the smallest eigenvalue of the partial
//! transpose. Mixing weights that wash out entanglement form an up-closed
//! interval (the PPT set is convex and contains the mixer), so the minimal
//! weight along any mixer is found by bisection on feasibility.

mod sampling;
mod search;

pub use sampling::{sample_entangled, sample_separable, sample_state, sample_tetrahedron_t, MIXER_GENERATOR};
pub use search::{absolute_robustness_search, random_robustness_numeric};

use crate::bd::{density_matrix, l1_norm, twirl_density, BdState, TVector};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, mix_matrices, partial_transpose, Complex, DensityMatrix, Matrix4};
use crate::scalar::Scalar;

/// Largest mixing weight tried before giving up on a mixer.
pub const WEIGHT_CAP: f64 = (1u64 << 20) as f64;

/// One pure product term `w |a⟩⟨a| ⊗ |b⟩⟨b|` of a separable mixture.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductTerm<T> {
    pub weight: T,
    pub a: [Complex<T>; 2],
    pub b: [Complex<T>; 2],
}

/// A separable state used as the mixer in `(ρ + sσ)/(1 + s)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SeparableMixer<T> {
    /// A Bell-diagonal state inside the octahedron.
    BdPoint(TVector<T>),
    /// A convex combination of at most four pure product states.
    ProductMixture(Vec<ProductTerm<T>>),
}

impl<T: Scalar> SeparableMixer<T> {
    pub fn bd_point(t: [T; 3]) -> Result<Self> {
        let norm = l1_norm(&t);
        if !(norm <= T::one() + T::state_tol()) {
            return Err(Error::MixerNotSeparable(
                ((T::one() - norm) * T::lit(0.25)).to_f64_lossy(),
            ));
        }
        Ok(Self::BdPoint(TVector::new(t)?))
    }

    /// Normalizes the weights and the local vectors.
    pub fn product_mixture(terms: Vec<ProductTerm<T>>) -> Result<Self> {
        if terms.is_empty() || terms.len() > 4 {
            return Err(Error::MixerNotSeparable(f64::NAN));
        }
        let total: T = terms.iter().map(|t| t.weight).sum();
        if terms.iter().any(|t| !(t.weight >= T::zero())) || !(total > T::zero()) {
            return Err(Error::MixerNotSeparable(f64::NAN));
        }
        let normalize = |v: [Complex<T>; 2]| -> Result<[Complex<T>; 2]> {
            let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
            if !(n > T::zero()) || !n.is_finite() {
                return Err(Error::NonFinite);
            }
            Ok(v.map(|z| z.scale(n.recip())))
        };
        let terms = terms
            .into_iter()
            .map(|t| {
                Ok(ProductTerm {
                    weight: t.weight / total,
                    a: normalize(t.a)?,
                    b: normalize(t.b)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::ProductMixture(terms))
    }

    pub fn maximally_mixed() -> Self {
        Self::BdPoint(TVector::new([T::zero(); 3]).expect("origin"))
    }

    /// The density matrix this mixer stands for.
    pub fn realize(&self) -> DensityMatrix<T> {
        match self {
            Self::BdPoint(t) => density_matrix(&BdState::from_tvec(t.components()).expect("validated")),
            Self::ProductMixture(terms) => {
                let mut m = Matrix4::zeros();
                for term in terms {
                    let psi = [
                        term.a[0] * term.b[0],
                        term.a[0] * term.b[1],
                        term.a[1] * term.b[0],
                        term.a[1] * term.b[1],
                    ];
                    m = m + Matrix4::from_fn(|i, j| (psi[i] * psi[j].conj()).scale(term.weight));
                }
                DensityMatrix::new_unchecked(m)
            }
        }
    }

    /// Bell-diagonal projection of the mixer.
    pub fn twirled(&self) -> Result<Self> {
        match self {
            Self::BdPoint(_) => Ok(self.clone()),
            Self::ProductMixture(_) => {
                let s = twirl_density(&self.realize())?;
                Self::bd_point(s.t())
            }
        }
    }
}

/// Smallest eigenvalue of the partial transpose.
pub fn min_pt_eigenvalue<T: Scalar>(rho: &Matrix4<T>) -> Result<T> {
    Ok(hermitian_eigenvalues(&partial_transpose(rho), T::matrix_tol())?[0])
}

pub fn is_ppt<T: Scalar>(rho: &DensityMatrix<T>, tol: T) -> Result<bool> {
    Ok(min_pt_eigenvalue(rho.matrix())? >= -tol)
}

/// Feasibility of `(ρ + sσ)/(1 + s)` as a function of `s`.
pub(crate) struct MixingLine<T> {
    rho: Matrix4<T>,
    mixer: Matrix4<T>,
}

impl<T: Scalar> MixingLine<T> {
    pub(crate) fn new(rho: &DensityMatrix<T>, mixer: &SeparableMixer<T>) -> Result<Self> {
        let mixer = mixer.realize();
        let min = min_pt_eigenvalue(mixer.matrix())?;
        if min < -T::psd_tol() {
            return Err(Error::MixerNotSeparable(min.to_f64_lossy()));
        }
        Ok(Self { rho: *rho.matrix(), mixer: mixer.into_matrix() })
    }

    pub(crate) fn feasible(&self, s: T) -> Result<bool> {
        let mixed = mix_matrices(&self.rho, &self.mixer, s);
        Ok(min_pt_eigenvalue(&mixed)? >= -T::ppt_tol())
    }

    /// Bisects `[lo, hi]` (lo infeasible, hi feasible) to width `< tol` and
    /// returns the feasible end.
    pub(crate) fn bisect(&self, mut lo: T, mut hi: T, tol: T) -> Result<T> {
        let half = T::lit(0.5);
        while hi - lo >= tol {
            let mid = lo + (hi - lo) * half;
            if mid <= lo || mid >= hi {
                break;
            }
            if self.feasible(mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }

    /// Minimal feasible weight, doubling the bracket from 1 up to [`WEIGHT_CAP`].
    pub(crate) fn minimal_weight(&self, tol: T) -> Result<T> {
        if self.feasible(T::zero())? {
            return Ok(T::zero());
        }
        let cap = T::lit(WEIGHT_CAP);
        let mut hi = T::one();
        while !self.feasible(hi)? {
            if hi >= cap {
                return Err(Error::NoFeasiblePoint(WEIGHT_CAP));
            }
            hi = hi + hi;
        }
        let lo = if hi == T::one() { T::zero() } else { hi * T::lit(0.5) };
        self.bisect(lo, hi, tol)
    }
}

/// Minimal `s ≥ 0` making `(ρ + s·mixer)/(1 + s)` PPT, to within `tol`.
/// The returned value is always on the feasible side.
pub fn robustness_along<T: Scalar>(rho: &DensityMatrix<T>, mixer: &SeparableMixer<T>, tol: T) -> Result<T> {
    if !(tol > T::zero()) {
        return Err(Error::InvalidTolerance(tol.to_f64_lossy()));
    }
    MixingLine::new(rho, mixer)?.minimal_weight(tol)
}

/// What an [`OracleReport`] asserts about `numeric_value` vs `closed_form`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// `|gap| ≤ tolerance`.
    Equality,
    /// `gap ≥ -tolerance`: no mixer beats the closed form.
    LowerBound,
}

/// Best value attained on the Bell-diagonal grid, and how far from the
/// closed form it is allowed to be.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCheck<T> {
    pub grid_n: usize,
    pub points: usize,
    pub best: T,
    pub bound: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport<T> {
    pub claim: Claim,
    pub closed_form: T,
    pub numeric_value: T,
    /// `numeric_value - closed_form`.
    pub gap: T,
    pub samples_tried: usize,
    pub tolerance: T,
    pub witness: Option<SeparableMixer<T>>,
    pub grid: Option<GridCheck<T>>,
}

impl<T: Scalar> OracleReport<T> {
    pub fn is_valid(&self) -> bool {
        let claim_ok = match self.claim {
            Claim::Equality => self.gap.abs() <= self.tolerance,
            Claim::LowerBound => self.gap >= -self.tolerance,
        };
        let grid_ok = self
            .grid
            .map_or(true, |g| g.best - self.closed_form <= g.bound);
        claim_ok && grid_ok
    }
}
