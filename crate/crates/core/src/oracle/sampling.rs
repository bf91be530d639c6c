//! Seeded samplers for states and separable mixers.
//!
//! All randomness goes through [`ChaCha8Rng`], whose output stream is fixed
//! for a given seed on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use super::{ProductTerm, SeparableMixer};
use crate::bd::{classify, positivity_conditions, BdState};
use crate::linalg::Complex;
use crate::scalar::Scalar;

/// Name of the generator behind [`sample_separable`].
pub const MIXER_GENERATOR: &str = "ChaCha8Rng::seed_from_u64";

/// Uniform point of the positivity tetrahedron, by rejection from `[-1, 1]³`.
pub fn sample_tetrahedron_t<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let t: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        if positivity_conditions(&t).iter().all(|x| *x >= 0.0) {
            return t;
        }
    }
}

pub fn sample_state<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> BdState<T> {
    let t = sample_tetrahedron_t(rng).map(T::lit);
    BdState::from_tvec(t).expect("sampled inside the tetrahedron")
}

/// Uniform entangled state (uniform on the four entangled corners).
pub fn sample_entangled<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> BdState<T> {
    loop {
        let s = sample_state(rng);
        if classify(&s).is_entangled() {
            return s;
        }
    }
}

fn haar_qubit<R: Rng + ?Sized, T: Scalar>(rng: &mut R) -> [Complex<T>; 2] {
    loop {
        let g: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(rng));
        let n = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return [
                Complex::new(T::lit(g[0] / n), T::lit(g[1] / n)),
                Complex::new(T::lit(g[2] / n), T::lit(g[3] / n)),
            ];
        }
    }
}

/// Deterministic random separable mixer: 1 to 4 product terms with
/// Dirichlet(1, …, 1) weights and Haar-random local pure states (normalized
/// complex Gaussians).
pub fn sample_separable<T: Scalar>(seed: u64) -> SeparableMixer<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_terms = rng.random_range(1..=4usize);
    let raw: Vec<f64> = (0..n_terms).map(|_| Exp1.sample(&mut rng)).collect();
    let total: f64 = raw.iter().sum();
    let terms = raw
        .iter()
        .map(|w| ProductTerm {
            weight: T::lit(w / total),
            a: haar_qubit(&mut rng),
            b: haar_qubit(&mut rng),
        })
        .collect();
    SeparableMixer::product_mixture(terms).expect("positive weights and unit vectors")
}
