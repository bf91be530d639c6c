//! Fixed-size complex linear algebra for two-qubit operators.
//!
//! Basis order throughout the crate is `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`, i.e. row-major
//! `(first factor ⊗ second factor)` with index `2 * a + b`.

mod complex;
mod density;
mod eigen;
mod matrix;
mod ops;

pub use complex::Complex;
pub use density::DensityMatrix;
pub(crate) use density::mix_matrices;
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen, MAX_SWEEPS};
pub use matrix::{pauli, Matrix2, Matrix4};
pub use ops::{kron, partial_transpose, sigma_yy, spin_flip, spin_flip_matrix, sqrt_psd};
