//! Bell-diagonal two-qubit states: separability geometry, concurrence,
//! robustness of entanglement with its optimal separable pair, and random
//! robustness, each backed by an independent PPT-bisection oracle.
//!
//! The numeric core is generic over [`Scalar`] (`f32` or `f64`); the
//! `*F64` / `*F32` aliases below fix the precision.
//!
//! ```
//! use bellgeom::{bd, measures, BdStateF64};
//!
//! let singlet = BdStateF64::from_probs([0.0, 0.0, 0.0, 1.0]).unwrap();
//! let cert = measures::robustness(&singlet);
//! assert_eq!(cert.s, 1.0);
//! assert_eq!(measures::random_robustness(&singlet), 2.0);
//! assert!(bd::classify(&singlet).is_entangled());
//! ```

pub mod bd;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod oracle;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type ComplexF64 = linalg::Complex<f64>;
pub type ComplexF32 = linalg::Complex<f32>;
pub type Matrix2F64 = linalg::Matrix2<f64>;
pub type Matrix2F32 = linalg::Matrix2<f32>;
pub type Matrix4F64 = linalg::Matrix4<f64>;
pub type Matrix4F32 = linalg::Matrix4<f32>;
pub type DensityMatrixF64 = linalg::DensityMatrix<f64>;
pub type DensityMatrixF32 = linalg::DensityMatrix<f32>;
pub type ProbVectorF64 = bd::ProbVector<f64>;
pub type ProbVectorF32 = bd::ProbVector<f32>;
pub type TVectorF64 = bd::TVector<f64>;
pub type TVectorF32 = bd::TVector<f32>;
pub type BdStateF64 = bd::BdState<f64>;
pub type BdStateF32 = bd::BdState<f32>;
pub type RobustnessCertificateF64 = measures::RobustnessCertificate<f64>;
pub type RobustnessCertificateF32 = measures::RobustnessCertificate<f32>;
pub type SeparableMixerF64 = oracle::SeparableMixer<f64>;
pub type SeparableMixerF32 = oracle::SeparableMixer<f32>;
pub type OracleReportF64 = oracle::OracleReport<f64>;
pub type OracleReportF32 = oracle::OracleReport<f32>;
