use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex count {n} outside the supported range {min}..={max}")]
    UnsupportedOrder { n: usize, min: usize, max: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("zero denominator in {0}")]
    ZeroDenominator(&'static str),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("bound violation: {0}")]
    BoundViolation(String),
    #[error("sequence lengths differ ({a} vs {b}) or are empty")]
    LengthMismatch { a: usize, b: usize },
    #[error("not an integer: {0}")]
    NotIntegral(String),
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("minimum degree is zero")]
    ZeroMinimumDegree,
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
