use bellgeom::bd::{
    classify, classify_by_inequalities, density_matrix, density_matrix_from_projectors, l1_norm, twirl, BdState,
    Region,
};
use bellgeom::linalg::{hermitian_eigen, partial_transpose, spin_flip, sqrt_psd, Complex, DensityMatrix, Matrix4};
use bellgeom::measures::{concurrence, random_robustness, robustness};
use bellgeom::oracle::{absolute_robustness_search, robustness_along, sample_entangled, sample_separable};
use bellgeom::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complex_matrix(v: &[f64]) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| Complex::new(v[2 * (4 * i + j)], v[2 * (4 * i + j) + 1]))
}

fn hermitian() -> impl Strategy<Value = Matrix4<f64>> {
    prop::collection::vec(-1.0..1.0f64, 32).prop_map(|v| {
        let a = complex_matrix(&v);
        (a + a.adjoint()).scale(0.5)
    })
}

fn density() -> impl Strategy<Value = DensityMatrix<f64>> {
    prop::collection::vec(-1.0..1.0f64, 32).prop_filter_map("degenerate", |v| {
        let a = complex_matrix(&v);
        let g = a * a.adjoint();
        let tr = g.trace().re;
        (tr > 1e-3).then(|| DensityMatrix::new(g.scale(1.0 / tr)).unwrap())
    })
}

fn tetra_point() -> impl Strategy<Value = [f64; 4]> {
    (0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64).prop_filter_map("zero weight", |(a, b, c, d)| {
        let sum = a + b + c + d;
        (sum > 1e-6).then(|| [a / sum, b / sum, c / sum, d / sum])
    })
}

proptest! {
    #[test]
    fn eigen_preserves_trace_and_square_trace(m in hermitian()) {
        let e = hermitian_eigen(&m, 1e-14).unwrap();
        let tr: f64 = e.values.iter().sum();
        let tr2: f64 = e.values.iter().map(|x| x * x).sum();
        prop_assert!((tr - m.trace().re).abs() < 1e-10);
        prop_assert!((tr2 - (m * m).trace().re).abs() < 1e-10);
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn eigenvectors_reconstruct(m in hermitian()) {
        let e = hermitian_eigen(&m, 1e-14).unwrap();
        let d = Matrix4::diag(e.values);
        let back = e.vectors * d * e.vectors.adjoint();
        prop_assert!(back.max_abs_diff(&m) < 1e-10);
    }

    #[test]
    fn partial_transpose_is_an_involution(m in hermitian()) {
        let pt = partial_transpose(&m);
        prop_assert_eq!(partial_transpose(&pt), m);
        prop_assert!(pt.hermitian_defect() < 1e-15);
        prop_assert!((pt.trace() - m.trace()).abs() < 1e-15);
    }

    #[test]
    fn sqrt_squares_back(rho in density()) {
        let r = sqrt_psd(rho.matrix(), 1e-10).unwrap();
        prop_assert!((r * r).max_abs_diff(rho.matrix()) < 1e-9);
    }

    #[test]
    fn spin_flip_is_a_trace_preserving_involution(rho in density()) {
        let f = spin_flip(&rho);
        prop_assert!((f.trace() - Complex::real(1.0)).abs() < 1e-12);
        let back = spin_flip(&DensityMatrix::new(f).unwrap());
        prop_assert!(back.max_abs_diff(rho.matrix()) < 1e-12);
    }

    #[test]
    fn bd_coordinates_round_trip(p in tetra_point()) {
        let s = BdState::from_probs(p).unwrap();
        let back = BdState::from_tvec(s.t()).unwrap();
        for (a, b) in back.p().iter().zip(p) {
            prop_assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn bd_density_is_spin_flip_invariant_and_twirl_fixed(p in tetra_point()) {
        let s = BdState::from_probs(p).unwrap();
        let rho = density_matrix(&s);
        prop_assert!(spin_flip(&rho).max_abs_diff(rho.matrix()) < 1e-13);
        prop_assert!(rho.matrix().max_abs_diff(density_matrix_from_projectors(&s).matrix()) < 1e-13);
        let back = twirl(rho.matrix()).unwrap();
        for (a, b) in back.t().iter().zip(s.t()) {
            prop_assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn classification_routes_agree(p in tetra_point()) {
        let s = BdState::from_probs(p).unwrap();
        prop_assert_eq!(classify(&s), classify_by_inequalities(&s.t()));
    }

    #[test]
    fn entangled_sign_pattern_matches_region(p in tetra_point()) {
        let s = BdState::from_probs(p).unwrap();
        if let Region::Entangled(k) = classify(&s) {
            let v = k.vertex::<f64>();
            let t = s.t();
            let along: f64 = (0..3).map(|i| v[i] * t[i]).sum();
            prop_assert!((along - l1_norm(&t)).abs() < 1e-13);
            prop_assert!((0..3).all(|i| v[i] * t[i] >= -1e-15));
        }
    }

    #[test]
    fn measures_are_consistent(p in tetra_point()) {
        let s = BdState::from_probs(p).unwrap();
        let c = concurrence(&s);
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert_eq!(robustness(&s).s, c);
        prop_assert!((random_robustness(&s) - 2.0 * c).abs() < 1e-15);
    }

    #[test]
    fn twirling_a_mixer_never_hurts(seed in 0u64..10_000, state_seed in 0u64..10_000) {
        let s: BdState<f64> = sample_entangled(&mut ChaCha8Rng::seed_from_u64(state_seed));
        let rho = density_matrix(&s);
        let mixer = sample_separable::<f64>(seed);
        let twirled = robustness_along(&rho, &mixer.twirled().unwrap(), 1e-10).unwrap();
        match robustness_along(&rho, &mixer, 1e-10) {
            Ok(direct) => prop_assert!(twirled <= direct + 1e-9),
            Err(Error::NoFeasiblePoint(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
        prop_assert!(twirled >= robustness(&s).s - 1e-9);
    }
}

#[test]
fn ten_thousand_bd_states_are_valid_density_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let s: BdState<f64> = bellgeom::oracle::sample_state(&mut rng);
        let m = density_matrix(&s).into_matrix();
        assert!(DensityMatrix::new(m).is_ok());
    }
}

#[test]
fn search_never_undercuts_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..1000 {
        let s: BdState<f64> = sample_entangled(&mut rng);
        let r = absolute_robustness_search(&s, 50, 11, i, 1e-10).unwrap();
        assert!(r.gap >= -1e-9, "undercut {:e} at t = {:?}", r.gap, s.t());
        assert!(r.grid.unwrap().best - r.closed_form <= 1.0 / 11.0);
    }
}

#[test]
fn f32_pipeline_agrees_with_f64() {
    let s32 = BdState::<f32>::from_probs([0.05, 0.1, 0.15, 0.7]).unwrap();
    let s64 = BdState::<f64>::from_probs([0.05, 0.1, 0.15, 0.7]).unwrap();
    assert!((robustness(&s32).s as f64 - robustness(&s64).s).abs() < 1e-6);
    let w = bellgeom::measures::concurrence_wootters(&density_matrix(&s32)).unwrap();
    assert!((w as f64 - concurrence(&s64)).abs() < 1e-4);
}
