use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: skew part {skew:.3e} exceeds tolerance {tol:.3e}")]
    NonHermitianInput { skew: f64, tol: f64 },
    #[error("matrix is numerically singular at pivot {pivot} (|pivot| = {magnitude:.3e})")]
    SingularMatrix { pivot: usize, magnitude: f64 },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("angle {0} is outside [0, pi/2)")]
    InvalidAngle(f64),
    #[error("operation is undefined for semi-angle 0")]
    DegenerateAngle,
    #[error("vector is not normalized: |f| = {0}")]
    NotUnitVector(f64),
    #[error("operator is not in the contraction class at angle {alpha}: norms ({plus:.6}, {minus:.6})")]
    NotInClass { alpha: f64, plus: f64, minus: f64 },
    #[error("numerical-range certificate failed: worst distance {worst:.3e}")]
    CertificationFailure { worst: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
