use super::complex::Complex;
use super::density::DensityMatrix;
use super::eigen::hermitian_eigen;
use super::matrix::{pauli, Matrix2, Matrix4};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Kronecker product `a ⊗ b`; block `(i, j)` of the result is `a[i][j] * b`.
pub fn kron<T: Scalar>(a: &Matrix2<T>, b: &Matrix2<T>) -> Matrix4<T> {
    Matrix4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

/// Transpose on the second tensor factor: `((i,j),(k,l)) -> ((i,l),(k,j))`.
pub fn partial_transpose<T: Scalar>(rho: &Matrix4<T>) -> Matrix4<T> {
    Matrix4::from_fn(|r, c| {
        let (i, j) = (r / 2, r % 2);
        let (k, l) = (c / 2, c % 2);
        rho[(2 * i + l, 2 * k + j)]
    })
}

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues in `[-tol, 0)` are clamped to zero.
pub fn sqrt_psd<T: Scalar>(m: &Matrix4<T>, tol: T) -> Result<Matrix4<T>> {
    let e = hermitian_eigen(m, tol)?;
    if e.values[0] < -tol {
        return Err(Error::NotPsd(e.values[0].to_f64_lossy()));
    }
    let roots = e.values.map(|x| x.max(T::zero()).sqrt());
    let v = e.vectors;
    Ok(Matrix4::from_fn(|i, j| {
        (0..4).fold(Complex::zero(), |acc, k| {
            acc + (v[(i, k)] * v[(j, k)].conj()).scale(roots[k])
        })
    }))
}

/// `σ_y ⊗ σ_y`.
pub fn sigma_yy<T: Scalar>() -> Matrix4<T> {
    kron(&pauli::sigma_y(), &pauli::sigma_y())
}

/// `(σ_y ⊗ σ_y) conj(m) (σ_y ⊗ σ_y)` on a raw matrix.
pub fn spin_flip_matrix<T: Scalar>(m: &Matrix4<T>) -> Matrix4<T> {
    let yy = sigma_yy();
    yy * m.conj() * yy
}

pub fn spin_flip<T: Scalar>(rho: &DensityMatrix<T>) -> Matrix4<T> {
    spin_flip_matrix(rho.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigen::hermitian_eigenvalues;

    fn singlet() -> Matrix4<f64> {
        let mut m = Matrix4::zeros();
        m[(1, 1)] = Complex::real(0.5);
        m[(2, 2)] = Complex::real(0.5);
        m[(1, 2)] = Complex::real(-0.5);
        m[(2, 1)] = Complex::real(-0.5);
        m
    }

    /// Leibniz-formula determinant; independent of the Jacobi path.
    fn det4(m: &Matrix4<f64>) -> Complex<f64> {
        let mut total = Complex::zero();
        let mut perm = [0usize, 1, 2, 3];
        fn heap(k: usize, perm: &mut [usize; 4], m: &Matrix4<f64>, total: &mut Complex<f64>) {
            if k == 1 {
                let mut inversions = 0;
                for a in 0..4 {
                    for b in (a + 1)..4 {
                        if perm[a] > perm[b] {
                            inversions += 1;
                        }
                    }
                }
                let mut prod = Complex::one();
                for (r, &c) in perm.iter().enumerate() {
                    prod = prod * m[(r, c)];
                }
                *total = if inversions % 2 == 0 { *total + prod } else { *total - prod };
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, m, total);
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        heap(4, &mut perm, m, &mut total);
        total
    }

    #[test]
    fn kron_examples() {
        let i2 = pauli::identity::<f64>();
        assert_eq!(kron(&i2, &i2), Matrix4::identity());
        let zz = kron(&pauli::sigma_z::<f64>(), &pauli::sigma_z());
        assert_eq!(zz, Matrix4::diag([1.0, -1.0, -1.0, 1.0]));
        let xx = kron(&pauli::sigma_x::<f64>(), &pauli::sigma_x());
        let anti = Matrix4::from_fn(|r, c| Complex::real(if r + c == 3 { 1.0 } else { 0.0 }));
        assert_eq!(xx, anti);
    }

    #[test]
    fn kron_matches_index_formula() {
        let a = Matrix2::from_fn(|i, j| Complex::new(1.0 + i as f64, j as f64 - 0.5));
        let b = Matrix2::from_fn(|i, j| Complex::new(0.25 * j as f64, 2.0 - i as f64));
        let k = kron(&a, &b);
        for i in 0..2 {
            for j in 0..2 {
                for p in 0..2 {
                    for q in 0..2 {
                        assert_eq!(k[(2 * i + p, 2 * j + q)], a[(i, j)] * b[(p, q)]);
                    }
                }
            }
        }
    }

    #[test]
    fn singlet_partial_transpose_spectrum() {
        let pt = partial_transpose(&singlet());
        // det(λI - PT) must equal (λ + 1/2)(λ - 1/2)^3 as a polynomial; matching
        // five points pins down a quartic.
        for lambda in [-1.0, -0.5, 0.0, 0.3, 2.0] {
            let shifted = Matrix4::identity().scale(lambda) - pt;
            let expected = (lambda + 0.5) * (lambda - 0.5f64).powi(3);
            let d = det4(&shifted);
            assert!((d.re - expected).abs() < 1e-14 && d.im.abs() < 1e-14);
        }
        let vals = hermitian_eigenvalues(&pt, 1e-12).unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (v, e) in vals.iter().zip(expected) {
            assert!((v - e).abs() < 1e-14);
        }
    }

    #[test]
    fn partial_transpose_on_products_and_identity() {
        let id = Matrix4::<f64>::identity().scale(0.25);
        assert_eq!(partial_transpose(&id), id);
        let a = Matrix2::from_fn(|i, j| Complex::new(i as f64 + 1.0, 0.5 * j as f64));
        let b = Matrix2::from_fn(|i, j| Complex::new(j as f64 - 1.0, i as f64 + 0.25));
        assert_eq!(partial_transpose(&kron(&a, &b)), kron(&a, &b.transpose()));
    }

    #[test]
    fn sqrt_examples() {
        let id = Matrix4::<f64>::identity();
        assert!(sqrt_psd(&id, 1e-12).unwrap().approx_eq(&id, 1e-14));

        let m = Matrix4::diag([4.0, 1.0, 0.0, 9.0]).scale(1.0 / 14.0);
        let r = sqrt_psd(&m, 1e-12).unwrap();
        let expected = Matrix4::diag([2.0, 1.0, 0.0, 3.0]).scale(1.0 / 14f64.sqrt());
        assert!(r.approx_eq(&expected, 1e-15));

        let s = singlet();
        assert!(sqrt_psd(&s, 1e-12).unwrap().approx_eq(&s, 1e-14));
    }

    #[test]
    fn sqrt_rejects_indefinite() {
        let m = Matrix4::diag([1.0, -0.1, 0.0, 0.0]);
        assert!(matches!(sqrt_psd(&m, 1e-10), Err(Error::NotPsd(x)) if x < -0.09));
        // tiny negative eigenvalues within tolerance are clamped
        let m = Matrix4::diag([1.0, -1e-12, 0.0, 0.0]);
        let r = sqrt_psd(&m, 1e-10).unwrap();
        assert_eq!(r[(1, 1)].re, 0.0);
    }

    #[test]
    fn spin_flip_fixed_points() {
        assert!(spin_flip_matrix(&singlet()).approx_eq(&singlet(), 1e-15));
        let mixed = Matrix4::<f64>::identity().scale(0.25);
        assert!(spin_flip_matrix(&mixed).approx_eq(&mixed, 1e-15));
        // |00><00| flips to |11><11|
        let mut up = Matrix4::<f64>::zeros();
        up[(0, 0)] = Complex::one();
        let flipped = spin_flip_matrix(&up);
        assert_eq!(flipped[(3, 3)], Complex::one());
        assert_eq!(flipped[(0, 0)], Complex::zero());
    }
}
