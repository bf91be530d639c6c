//! Bell-diagonal two-qubit states.
//!
//! A state is `ρ = Σ p_k |ψ_k⟩⟨ψ_k|` over the Bell basis, or equivalently
//! `ρ = ¼ (I⊗I + Σ t_i σ_i⊗σ_i)`. The two coordinate systems are related by
//! `t = Σ p_k v_k` and `p_k = (1 + v_k·t) / 4`, where `v_k` are the vertices of
//! the positivity tetrahedron ([`TETRA_VERTICES`]).
//!
//! Separable states form the octahedron `‖t‖₁ ≤ 1`. Outside it the tetrahedron
//! splits into four entangled corners, one per Bell vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, Complex, DensityMatrix, Matrix4};
use crate::scalar::Scalar;

/// Correlation vectors of the four Bell projectors, in Bell-index order
/// (φ⁺, φ⁻, ψ⁺, ψ⁻).
pub const TETRA_VERTICES: [[f64; 3]; 4] = [
    [1.0, -1.0, 1.0],
    [-1.0, 1.0, 1.0],
    [1.0, 1.0, -1.0],
    [-1.0, -1.0, -1.0],
];

/// Vertices `(±1,0,0), (0,±1,0), (0,0,±1)` of the separable octahedron.
pub const OCTA_VERTICES: [[f64; 3]; 6] = [
    [1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, -1.0, 0.0],
    [0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0],
];

/// Index of a Bell state, 1 through 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BellIndex(u8);

impl BellIndex {
    pub const ALL: [BellIndex; 4] = [BellIndex(1), BellIndex(2), BellIndex(3), BellIndex(4)];

    pub fn new(k: usize) -> Result<Self> {
        if (1..=4).contains(&k) {
            Ok(Self(k as u8))
        } else {
            Err(Error::IndexOutOfRange(k))
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    fn slot(self) -> usize {
        self.0 as usize - 1
    }

    pub fn vertex<T: Scalar>(self) -> [T; 3] {
        TETRA_VERTICES[self.slot()].map(T::lit)
    }
}

impl fmt::Display for BellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which of the five tetrahedron regions a state lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Separable,
    Entangled(BellIndex),
}

impl Region {
    pub fn is_entangled(self) -> bool {
        matches!(self, Region::Entangled(_))
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Separable => f.write_str("Separable"),
            Region::Entangled(k) => write!(f, "Entangled({k})"),
        }
    }
}

#[inline]
fn dot<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn l1_norm<T: Scalar>(t: &[T; 3]) -> T {
    t[0].abs() + t[1].abs() + t[2].abs()
}

/// Left-hand sides of the positivity inequalities, in the order
/// `1+t1-t2+t3, 1-t1+t2+t3, 1+t1+t2-t3, 1-t1-t2-t3`; entry k equals `4 p_k`.
pub fn positivity_conditions<T: Scalar>(t: &[T; 3]) -> [T; 4] {
    let one = T::one();
    let [t1, t2, t3] = *t;
    [
        one + t1 - t2 + t3,
        one - t1 + t2 + t3,
        one + t1 + t2 - t3,
        one - t1 - t2 - t3,
    ]
}

/// Left-hand sides of the partial-transpose positivity inequalities, in the
/// order `1+t1+t2+t3, 1-t1-t2+t3, 1+t1-t2-t3, 1-t1+t2-t3`. Each is four times
/// an eigenvalue of the partial transpose; entry `j` is `1 - v_{4-j}·t`.
pub fn ppt_conditions<T: Scalar>(t: &[T; 3]) -> [T; 4] {
    let one = T::one();
    let [t1, t2, t3] = *t;
    [
        one + t1 + t2 + t3,
        one - t1 - t2 + t3,
        one + t1 - t2 - t3,
        one - t1 + t2 - t3,
    ]
}

/// Probability weights over the Bell basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbVector<T>([T; 4]);

impl<T: Scalar> ProbVector<T> {
    pub fn new(p: [T; 4]) -> Result<Self> {
        let tol = T::state_tol();
        if let Some(bad) = p.iter().find(|x| !x.is_finite() || **x < -tol || **x > T::one() + tol) {
            return Err(Error::InvalidProbabilities(format!(
                "entry {bad} outside [0, 1]"
            )));
        }
        let sum: T = p.iter().copied().sum();
        if (sum - T::one()).abs() > tol {
            return Err(Error::InvalidProbabilities(format!("sum is {sum}, expected 1")));
        }
        Ok(Self(p))
    }

    pub fn components(&self) -> [T; 4] {
        self.0
    }

    pub fn get(&self, k: BellIndex) -> T {
        self.0[k.slot()]
    }

    /// `Σ p_k v_k`.
    pub fn to_tvec(&self) -> [T; 3] {
        let [p1, p2, p3, p4] = self.0;
        [
            p1 - p2 + p3 - p4,
            -p1 + p2 + p3 - p4,
            p1 + p2 - p3 - p4,
        ]
    }

    /// Bell index of the largest weight; first index wins ties.
    pub fn argmax(&self) -> BellIndex {
        let mut best = 0;
        for k in 1..4 {
            if self.0[k] > self.0[best] {
                best = k;
            }
        }
        BellIndex(best as u8 + 1)
    }
}

/// Correlation vector `(t1, t2, t3)` inside the positivity tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TVector<T>([T; 3]);

impl<T: Scalar> TVector<T> {
    pub fn new(t: [T; 3]) -> Result<Self> {
        if t.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let worst = positivity_conditions(&t)
            .into_iter()
            .fold(T::infinity(), T::min);
        if worst < -T::state_tol() {
            return Err(Error::OutsideTetrahedron(worst.to_f64_lossy()));
        }
        Ok(Self(t))
    }

    pub fn components(&self) -> [T; 3] {
        self.0
    }

    pub fn l1_norm(&self) -> T {
        l1_norm(&self.0)
    }

    /// `p_k = (1 + v_k·t) / 4`.
    pub fn to_probs(&self) -> [T; 4] {
        let quarter = T::lit(0.25);
        BellIndex::ALL.map(|k| (T::one() + dot(&k.vertex(), &self.0)) * quarter)
    }
}

/// A Bell-diagonal state held in both coordinate systems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BdState<T> {
    p: ProbVector<T>,
    t: TVector<T>,
}

impl<T: Scalar> BdState<T> {
    pub fn from_probs(p: [T; 4]) -> Result<Self> {
        let p = ProbVector::new(p)?;
        let t = TVector(p.to_tvec());
        Ok(Self { p, t })
    }

    pub fn from_tvec(t: [T; 3]) -> Result<Self> {
        let t = TVector::new(t)?;
        let p = ProbVector(t.to_probs());
        Ok(Self { p, t })
    }

    pub fn maximally_mixed() -> Self {
        Self::from_tvec([T::zero(); 3]).expect("origin is a state")
    }

    /// The pure Bell state `|ψ_k⟩⟨ψ_k|`.
    pub fn bell(k: BellIndex) -> Self {
        Self::from_tvec(k.vertex()).expect("vertices are states")
    }

    pub fn probs(&self) -> &ProbVector<T> {
        &self.p
    }

    pub fn tvec(&self) -> &TVector<T> {
        &self.t
    }

    pub fn p(&self) -> [T; 4] {
        self.p.components()
    }

    pub fn t(&self) -> [T; 3] {
        self.t.components()
    }

    /// `‖t‖₁`.
    pub fn level(&self) -> T {
        self.t.l1_norm()
    }
}

/// Amplitudes of the k-th Bell state in the computational basis.
pub fn bell_vector<T: Scalar>(k: usize) -> Result<[Complex<T>; 4]> {
    let k = BellIndex::new(k)?;
    let h = Complex::real(T::lit(std::f64::consts::FRAC_1_SQRT_2));
    let z = Complex::zero();
    Ok(match k.get() {
        1 => [h, z, z, h],
        2 => [h, z, z, -h],
        3 => [z, h, h, z],
        _ => [z, h, -h, z],
    })
}

/// `¼ (I⊗I + Σ t_i σ_i⊗σ_i)`.
pub fn density_matrix<T: Scalar>(s: &BdState<T>) -> DensityMatrix<T> {
    let t = s.t();
    let mut m = Matrix4::identity();
    for (i, ti) in t.iter().enumerate() {
        let s = pauli::sigma::<T>(i + 1);
        m = m + kron(&s, &s).scale(*ti);
    }
    DensityMatrix::new_unchecked(m.scale(T::lit(0.25)))
}

/// `Σ p_k |ψ_k⟩⟨ψ_k|`, the projector-sum construction of the same matrix.
pub fn density_matrix_from_projectors<T: Scalar>(s: &BdState<T>) -> DensityMatrix<T> {
    let p = s.p();
    let mut m = Matrix4::zeros();
    for (slot, pk) in p.iter().enumerate() {
        let psi = bell_vector::<T>(slot + 1).expect("index in range");
        m = m + Matrix4::from_fn(|i, j| (psi[i] * psi[j].conj()).scale(*pk));
    }
    DensityMatrix::new_unchecked(m)
}

/// Separable iff `‖t‖₁ ≤ 1` (boundary inclusive); otherwise entangled toward
/// the Bell state of largest weight.
pub fn classify<T: Scalar>(s: &BdState<T>) -> Region {
    if s.level() <= T::one() + T::state_tol() {
        Region::Separable
    } else {
        Region::Entangled(s.probs().argmax())
    }
}

/// Classification read directly off the two raw inequality families: a state
/// is entangled toward `k` exactly when the partial-transpose condition
/// `1 - v_k·t ≥ 0` fails.
pub fn classify_by_inequalities<T: Scalar>(t: &[T; 3]) -> Region {
    let tol = T::state_tol();
    let ppt = ppt_conditions(t);
    // ppt[j] = 1 - v_{4-j}·t
    match ppt.iter().position(|x| *x < -tol) {
        Some(j) => Region::Entangled(BellIndex((4 - j) as u8)),
        None => Region::Separable,
    }
}

/// Projects an arbitrary two-qubit state onto the Bell-diagonal family:
/// `t_i = tr(ρ σ_i⊗σ_i)`.
pub fn twirl<T: Scalar>(rho: &Matrix4<T>) -> Result<BdState<T>> {
    let rho = DensityMatrix::new(*rho).map_err(|e| Error::NotAState(e.to_string()))?;
    twirl_density(&rho)
}

pub fn twirl_density<T: Scalar>(rho: &DensityMatrix<T>) -> Result<BdState<T>> {
    let mut t = [T::zero(); 3];
    for (i, ti) in t.iter_mut().enumerate() {
        let s = pauli::sigma::<T>(i + 1);
        let v = (*rho.matrix() * kron(&s, &s)).trace();
        if v.im.abs() > T::psd_tol() {
            return Err(Error::NotAState(format!("complex correlation t{}", i + 1)));
        }
        *ti = v.re;
    }
    BdState::from_tvec(t).map_err(|e| Error::NotAState(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigenvalues;

    fn close3(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn from_probs_examples() {
        let s = BdState::from_probs([0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.t(), [-1.0, -1.0, -1.0]);
        let s = BdState::from_probs([0.25; 4]).unwrap();
        assert_eq!(s.t(), [0.0; 3]);
        let s = BdState::from_probs([0.1, 0.1, 0.1, 0.7]).unwrap();
        assert!(close3(s.t(), [-0.6; 3], 1e-15));
        // twirl of the constructed matrix gives the same t
        let back = twirl(density_matrix(&s).matrix()).unwrap();
        assert!(close3(back.t(), [-0.6; 3], 1e-15));
    }

    #[test]
    fn from_probs_rejects_bad_input() {
        for p in [
            [-0.1, 0.4, 0.4, 0.3],
            [1.1, 0.0, 0.0, -0.1],
            [0.3, 0.3, 0.3, 0.3],
            [f64::NAN, 0.0, 0.0, 1.0],
        ] {
            assert!(matches!(BdState::from_probs(p), Err(Error::InvalidProbabilities(_))), "{p:?}");
        }
    }

    #[test]
    fn from_tvec_examples() {
        let s = BdState::from_tvec([0.0; 3]).unwrap();
        assert_eq!(s.p(), [0.25; 4]);
        let s = BdState::from_tvec([1.0, -1.0, 1.0]).unwrap();
        assert_eq!(s.p(), [1.0, 0.0, 0.0, 0.0]);
        let err = BdState::from_tvec([0.5, 0.5, 0.5]).unwrap_err();
        assert_eq!(err, Error::OutsideTetrahedron(-0.5));
    }

    #[test]
    fn bell_vectors() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v1 = bell_vector::<f64>(1).unwrap();
        assert_eq!(v1.map(|z| z.re), [h, 0.0, 0.0, h]);
        let v4 = bell_vector::<f64>(4).unwrap();
        assert_eq!(v4.map(|z| z.re), [0.0, h, -h, 0.0]);
        for i in 1..=4 {
            for j in 1..=4 {
                let (a, b) = (bell_vector::<f64>(i).unwrap(), bell_vector::<f64>(j).unwrap());
                let ip = a.iter().zip(b.iter()).fold(Complex::zero(), |acc, (x, y)| acc + x.conj() * *y);
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((ip.re - expected).abs() < 1e-15 && ip.im == 0.0);
            }
        }
        assert_eq!(bell_vector::<f64>(0), Err(Error::IndexOutOfRange(0)));
        assert_eq!(bell_vector::<f64>(5), Err(Error::IndexOutOfRange(5)));
    }

    #[test]
    fn vertices_are_bell_projectors() {
        for k in BellIndex::ALL {
            let s = BdState::<f64>::bell(k);
            let psi = bell_vector::<f64>(k.get()).unwrap();
            let proj = Matrix4::from_fn(|i, j| psi[i] * psi[j].conj());
            assert!(density_matrix(&s).matrix().approx_eq(&proj, 1e-15));
        }
    }

    #[test]
    fn density_matrix_examples() {
        let mixed = density_matrix(&BdState::<f64>::maximally_mixed());
        assert_eq!(*mixed.matrix(), Matrix4::identity().scale(0.25));

        let singlet = density_matrix(&BdState::from_probs([0.0, 0.0, 0.0, 1.0]).unwrap());
        let expected = Matrix4::from_real([
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.5, -0.5, 0.0],
            [0.0, -0.5, 0.5, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]);
        assert!(singlet.matrix().approx_eq(&expected, 1e-16));

        let third = -1.0 / 3.0;
        let m = density_matrix(&BdState::from_tvec([third; 3]).unwrap());
        let diag: Vec<f64> = (0..4).map(|i| m.matrix()[(i, i)].re).collect();
        let expected = [1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0];
        assert!(diag.iter().zip(expected).all(|(a, b)| (a - b).abs() < 1e-15));
        assert!((m.matrix()[(1, 2)].re + 1.0 / 6.0).abs() < 1e-15);
        assert!((m.matrix()[(2, 1)].re + 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&BdState::<f64>::maximally_mixed()), Region::Separable);
        let singlet = BdState::from_probs([0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(classify(&singlet), Region::Entangled(BellIndex::new(4).unwrap()));

        let s = BdState::from_probs([0.5, 0.2, 0.2, 0.1]).unwrap();
        assert!(close3(s.t(), [0.4, -0.2, 0.4], 1e-15));
        assert_eq!(classify(&s), Region::Separable);
        let ppt = ppt_conditions(&s.t());
        assert!(ppt.iter().all(|x| *x >= -1e-15));
        assert!(ppt.iter().any(|x| x.abs() < 1e-15));
    }

    #[test]
    fn inequality_classifier_agrees_on_vertices() {
        for k in BellIndex::ALL {
            let s = BdState::<f64>::bell(k);
            assert_eq!(classify_by_inequalities(&s.t()), Region::Entangled(k));
            assert_eq!(classify(&s), Region::Entangled(k));
        }
    }

    #[test]
    fn ppt_spectrum_is_quartered_conditions() {
        let s = BdState::from_probs([0.05, 0.6, 0.15, 0.2]).unwrap();
        let pt = crate::linalg::partial_transpose(density_matrix(&s).matrix());
        let mut eig = hermitian_eigenvalues(&pt, 1e-12).unwrap();
        let mut quartered = ppt_conditions(&s.t()).map(|x| x / 4.0);
        eig.sort_by(f64::total_cmp);
        quartered.sort_by(f64::total_cmp);
        for (a, b) in eig.iter().zip(quartered) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn twirl_examples() {
        let t = twirl(&Matrix4::<f64>::identity().scale(0.25)).unwrap();
        assert_eq!(t.t(), [0.0; 3]);
        let mut up = Matrix4::<f64>::zeros();
        up[(0, 0)] = Complex::one();
        assert_eq!(twirl(&up).unwrap().t(), [0.0, 0.0, 1.0]);
        let bad = Matrix4::<f64>::identity();
        assert!(matches!(twirl(&bad), Err(Error::NotAState(_))));
    }

    #[test]
    fn single_precision_state() {
        let s = BdState::<f32>::from_probs([0.1, 0.1, 0.1, 0.7]).unwrap();
        assert_eq!(classify(&s), Region::Entangled(BellIndex::new(4).unwrap()));
        assert!((s.level() - 1.8).abs() < 1e-6);
    }
}
