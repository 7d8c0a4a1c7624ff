use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside its domain ({domain})")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("series does not terminate: no upper parameter is a nonpositive integer in {0:?}")]
    NonTerminating(Vec<f64>),

    #[error("denominator Pochhammer ({parameter})_{index} vanishes inside the summation range")]
    DegenerateDenominator { parameter: f64, index: usize },

    #[error("result overflows f64: {0}")]
    Overflow(String),

    #[error("quadrature node solver failed: {0}")]
    Convergence(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point lies on the hyperplane at infinity of the affine chart: {0}")]
    ChartSingularity(String),

    #[error("dimension formula returned the non-integer value {0}")]
    NonIntegral(f64),

    #[error("integration method does not match the observable: {0}")]
    MethodMismatch(String),

    #[error("reproducing kernel vanishes at every sample point")]
    AllSamplesSkipped,
}

pub type Result<T> = std::result::Result<T, Error>;
