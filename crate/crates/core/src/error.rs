use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface mismatch")]
    SurfaceMismatch,
    #[error("coefficient vector has length {got}, surface needs {expected}")]
    WrongArity { expected: usize, got: usize },
    #[error("not ample: {0}")]
    NotAmple(String),
    #[error("not decomposable")]
    NotDecomposable,
    #[error("lambda out of range")]
    LambdaOutOfRange,
    #[error("outside nef range")]
    OutsideNefRange,
    #[error("tuple not primitive")]
    TupleNotPrimitive,
    #[error("operation needs a CM surface")]
    NotCm,
    #[error("operation needs the surface without CM")]
    NotNoCm,
    #[error("quadratic form is not positive definite")]
    NotPositiveDefinite,
    #[error("zero vector")]
    ZeroVector,
    #[error("value does not fit the machine integer used for enumeration")]
    Overflow,
    #[error("reduction failed to reach D = 1")]
    ReductionFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
