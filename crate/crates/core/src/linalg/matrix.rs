use std::ops::{Add, Index, IndexMut, Mul, Sub};

use super::complex::Complex;
use crate::scalar::Scalar;

macro_rules! square_matrix {
    ($name:ident, $n:expr) => {
        /// Dense row-major complex square matrix.
        #[derive(Debug, Clone, Copy, PartialEq)]
        pub struct $name<T> {
            entries: [[Complex<T>; $n]; $n],
        }

        impl<T: Scalar> $name<T> {
            pub const DIM: usize = $n;

            pub fn from_rows(entries: [[Complex<T>; $n]; $n]) -> Self {
                Self { entries }
            }

            /// Builds a matrix from real entries.
            pub fn from_real(rows: [[T; $n]; $n]) -> Self {
                Self::from_fn(|i, j| Complex::real(rows[i][j]))
            }

            pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
                let mut entries = [[Complex::zero(); $n]; $n];
                for (i, row) in entries.iter_mut().enumerate() {
                    for (j, e) in row.iter_mut().enumerate() {
                        *e = f(i, j);
                    }
                }
                Self { entries }
            }

            pub fn zeros() -> Self {
                Self::from_fn(|_, _| Complex::zero())
            }

            pub fn identity() -> Self {
                Self::from_fn(|i, j| if i == j { Complex::one() } else { Complex::zero() })
            }

            pub fn diag(values: [T; $n]) -> Self {
                Self::from_fn(|i, j| if i == j { Complex::real(values[i]) } else { Complex::zero() })
            }

            pub fn rows(&self) -> &[[Complex<T>; $n]; $n] {
                &self.entries
            }

            pub fn adjoint(&self) -> Self {
                Self::from_fn(|i, j| self.entries[j][i].conj())
            }

            pub fn transpose(&self) -> Self {
                Self::from_fn(|i, j| self.entries[j][i])
            }

            pub fn conj(&self) -> Self {
                Self::from_fn(|i, j| self.entries[i][j].conj())
            }

            pub fn scale(&self, k: T) -> Self {
                Self::from_fn(|i, j| self.entries[i][j].scale(k))
            }

            pub fn trace(&self) -> Complex<T> {
                (0..$n).fold(Complex::zero(), |acc, i| acc + self.entries[i][i])
            }

            /// Largest entrywise modulus of `self - other`.
            pub fn max_abs_diff(&self, other: &Self) -> T {
                let mut worst = T::zero();
                for i in 0..$n {
                    for j in 0..$n {
                        worst = worst.max((self.entries[i][j] - other.entries[i][j]).abs());
                    }
                }
                worst
            }

            pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
                self.max_abs_diff(other) <= tol
            }

            /// `max |m - m^H|` entrywise.
            pub fn hermitian_defect(&self) -> T {
                self.max_abs_diff(&self.adjoint())
            }

            pub fn frobenius_norm(&self) -> T {
                self.entries
                    .iter()
                    .flat_map(|r| r.iter())
                    .map(|z| z.norm_sqr())
                    .sum::<T>()
                    .sqrt()
            }

            pub fn is_finite(&self) -> bool {
                self.entries.iter().flat_map(|r| r.iter()).all(|z| z.is_finite())
            }
        }

        impl<T> Index<(usize, usize)> for $name<T> {
            type Output = Complex<T>;
            #[inline]
            fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
                &self.entries[i][j]
            }
        }

        impl<T> IndexMut<(usize, usize)> for $name<T> {
            #[inline]
            fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
                &mut self.entries[i][j]
            }
        }

        impl<T: Scalar> Add for $name<T> {
            type Output = Self;
            fn add(self, o: Self) -> Self {
                Self::from_fn(|i, j| self.entries[i][j] + o.entries[i][j])
            }
        }

        impl<T: Scalar> Sub for $name<T> {
            type Output = Self;
            fn sub(self, o: Self) -> Self {
                Self::from_fn(|i, j| self.entries[i][j] - o.entries[i][j])
            }
        }

        impl<T: Scalar> Mul for $name<T> {
            type Output = Self;
            fn mul(self, o: Self) -> Self {
                Self::from_fn(|i, j| {
                    (0..$n).fold(Complex::zero(), |acc, k| acc + self.entries[i][k] * o.entries[k][j])
                })
            }
        }
    };
}

square_matrix!(Matrix2, 2);
square_matrix!(Matrix4, 4);

/// Pauli matrices and the 2x2 identity.
pub mod pauli {
    use super::{Complex, Matrix2};
    use crate::scalar::Scalar;

    pub fn identity<T: Scalar>() -> Matrix2<T> {
        Matrix2::identity()
    }

    pub fn sigma_x<T: Scalar>() -> Matrix2<T> {
        Matrix2::from_real([[T::zero(), T::one()], [T::one(), T::zero()]])
    }

    pub fn sigma_y<T: Scalar>() -> Matrix2<T> {
        let i = Complex::i();
        Matrix2::from_rows([[Complex::zero(), -i], [i, Complex::zero()]])
    }

    pub fn sigma_z<T: Scalar>() -> Matrix2<T> {
        Matrix2::diag([T::one(), -T::one()])
    }

    /// `sigma_k` for k = 1, 2, 3.
    pub fn sigma<T: Scalar>(k: usize) -> Matrix2<T> {
        match k {
            1 => sigma_x(),
            2 => sigma_y(),
            3 => sigma_z(),
            _ => panic!("Pauli index {k} not in 1..=3"),
        }
    }
}
