use thiserror::Error;

/// Errors raised anywhere in the crate. Numeric payloads are reported as
/// `f64` regardless of the scalar type the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m - m^H| = {0:e})")]
    NotHermitian(f64),

    #[error("Jacobi eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("trace is {0}, expected 1")]
    InvalidTrace(f64),

    #[error("non-finite matrix or complex entry")]
    NonFinite,

    #[error("invalid probabilities: {0}")]
    InvalidProbabilities(String),

    #[error("correlation vector lies outside the positivity tetrahedron (worst face value {0:e})")]
    OutsideTetrahedron(f64),

    #[error("Bell index {0} is out of range 1..=4")]
    IndexOutOfRange(usize),

    #[error("not a valid two-qubit state: {0}")]
    NotAState(String),

    #[error("state is separable")]
    NotEntangled,

    #[error("mixer is not separable (min partial-transpose eigenvalue {0:e})")]
    MixerNotSeparable(f64),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("no feasible mixing weight up to {0}")]
    NoFeasiblePoint(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
