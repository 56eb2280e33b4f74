use thiserror::Error;

/// Errors for clutter construction, elimination, and resolution computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("antichain violation: circuit {inner} is contained in circuit {outer}")]
    AntichainViolation { inner: String, outer: String },

    #[error("vertex {vertex} is out of range (ground set has {n} vertices)")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("operation requires a d-uniform clutter")]
    NotUniform,

    #[error("set {set} has {got} elements, expected {expected}")]
    SizeViolation {
        set: String,
        got: u32,
        expected: u32,
    },

    #[error("circuit ideal is zero (the clutter is complete)")]
    ZeroIdeal,

    #[error("ideal has {got} generators, above the Taylor bound {bound}")]
    TooManyGenerators { got: usize, bound: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("{element} is not simplicial in the clutter")]
    NotSimplicial { element: String },

    #[error("circuit {circuit} does not contain the element {element}")]
    CircuitNotThroughE { circuit: String, element: String },

    #[error("invalid build step: {0}")]
    InvalidStep(String),

    #[error("generators of the smaller ideal are not a subset of the larger one")]
    NotSubideal,

    #[error("characteristic {0} is not prime")]
    NotPrime(u64),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Unrepresentable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
