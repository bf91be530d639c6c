//! Cyclic complex Jacobi eigensolver for 4x4 Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classical real Jacobi rotation to the resulting
//! real symmetric 2x2 block. Sweeps repeat until the off-diagonal Frobenius
//! norm drops below `JACOBI_TOL * max(1, ||m||_F)`.

use super::complex::Complex;
use super::matrix::Matrix4;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_SWEEPS: usize = 50;

/// Eigen-decomposition `m = V diag(values) V^H` with ascending `values`.
#[derive(Debug, Clone, Copy)]
pub struct HermitianEigen<T> {
    pub values: [T; 4],
    /// Unitary matrix whose columns are the eigenvectors, in the order of `values`.
    pub vectors: Matrix4<T>,
}

fn off_diagonal_norm<T: Scalar>(a: &Matrix4<T>) -> T {
    let mut acc = T::zero();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                acc = acc + a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

pub fn hermitian_eigen<T: Scalar>(m: &Matrix4<T>, tol: T) -> Result<HermitianEigen<T>> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let defect = m.hermitian_defect();
    if defect > tol {
        return Err(Error::NotHermitian(defect.to_f64_lossy()));
    }

    // Work on the exactly Hermitian part.
    let half = T::lit(0.5);
    let mut a = Matrix4::from_fn(|i, j| {
        if i == j {
            Complex::real(m[(i, i)].re)
        } else {
            (m[(i, j)] + m[(j, i)].conj()).scale(half)
        }
    });
    let mut v = Matrix4::<T>::identity();
    let threshold = T::lit(T::JACOBI_TOL) * T::one().max(m.frobenius_norm());

    let mut converged = off_diagonal_norm(&a) < threshold;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) < threshold;
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite diagonal"));
    let values = order.map(|i| a[(i, i)].re);
    let vectors = Matrix4::from_fn(|r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues<T: Scalar>(m: &Matrix4<T>, tol: T) -> Result<[T; 4]> {
    hermitian_eigen(m, tol).map(|e| e.values)
}

/// Applies `a <- U^H a U`, `v <- v U` with `U` annihilating `a[p][q]`.
fn rotate<T: Scalar>(a: &mut Matrix4<T>, v: &mut Matrix4<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.abs();
    if b == T::zero() {
        return;
    }
    // phase = e^{-i phi}, where a_pq = b e^{i phi}
    let phase = apq.conj().scale(b.recip());
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (b + b);
    let t = if theta == T::zero() {
        T::one()
    } else {
        theta.signum() / (theta.abs() + theta.hypot(T::one()))
    };
    let c = (t * t + T::one()).sqrt().recip();
    let s = t * c;

    let u_pp = Complex::real(c);
    let u_pq = Complex::real(s);
    let u_qp = phase.scale(-s);
    let u_qq = phase.scale(c);

    // columns: a <- a U, v <- v U
    for r in 0..4 {
        let (x, y) = (a[(r, p)], a[(r, q)]);
        a[(r, p)] = x * u_pp + y * u_qp;
        a[(r, q)] = x * u_pq + y * u_qq;
        let (x, y) = (v[(r, p)], v[(r, q)]);
        v[(r, p)] = x * u_pp + y * u_qp;
        v[(r, q)] = x * u_pq + y * u_qq;
    }
    // rows: a <- U^H a
    for col in 0..4 {
        let (x, y) = (a[(p, col)], a[(q, col)]);
        a[(p, col)] = u_pp.conj() * x + u_qp.conj() * y;
        a[(q, col)] = u_pq.conj() * x + u_qq.conj() * y;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::real(a[(p, p)].re);
    a[(q, q)] = Complex::real(a[(q, q)].re);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_eigenvalues() {
        let vals = hermitian_eigenvalues(&Matrix4::<f64>::identity(), 1e-12).unwrap();
        assert_eq!(vals, [1.0; 4]);
    }

    #[test]
    fn diagonal_input_is_sorted() {
        let m = Matrix4::diag([0.4, 0.1, 0.3, 0.2]);
        let vals = hermitian_eigenvalues(&m, 1e-12).unwrap();
        assert_eq!(vals, [0.1, 0.2, 0.3, 0.4]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = Matrix4::<f64>::identity();
        m[(0, 1)] = Complex::new(0.0, 1.0);
        assert!(matches!(hermitian_eigenvalues(&m, 1e-12), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn rejects_nan() {
        let mut m = Matrix4::<f64>::identity();
        m[(2, 2)] = Complex { re: f64::NAN, im: 0.0 };
        assert_eq!(hermitian_eigenvalues(&m, 1e-12), Err(Error::NonFinite));
    }

    #[test]
    fn reconstructs_complex_hermitian() {
        let m = Matrix4::from_fn(|i, j| {
            if i == j {
                Complex::real(i as f64 - 1.5)
            } else if i < j {
                Complex::new(0.3 * (i + j) as f64, 0.7 - 0.2 * j as f64)
            } else {
                Complex::new(0.3 * (i + j) as f64, -(0.7 - 0.2 * i as f64))
            }
        });
        let e = hermitian_eigen(&m, 1e-12).unwrap();
        let d = Matrix4::diag(e.values);
        let back = e.vectors * d * e.vectors.adjoint();
        assert!(back.approx_eq(&m, 1e-12), "{}", back.max_abs_diff(&m));
        let vv = e.vectors.adjoint() * e.vectors;
        assert!(vv.approx_eq(&Matrix4::identity(), 1e-12));
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn single_precision_runs() {
        let m = Matrix4::<f32>::diag([3.0, 1.0, 2.0, 0.0]);
        let v = hermitian_eigenvalues(&m, 1e-5).unwrap();
        assert_eq!(v, [0.0, 1.0, 2.0, 3.0]);
    }
}
