use thiserror::Error;

/// Errors raised by the means, measures and information-measure routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input vector is empty")]
    Empty,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid value {value} at index {index}: entries must be non-negative and not NaN")]
    InvalidValue { index: usize, value: f64 },

    #[error("weight at index {index} is not finite")]
    NonFiniteWeight { index: usize },

    #[error("total weight is zero")]
    ZeroTotalWeight,

    #[error("power mean of order 0 is discontinuous when values contain both 0 and +inf")]
    Discontinuity,

    #[error("escort distribution diverges: order {order} with value {value} on the support")]
    DivergentEscort { order: f64, value: f64 },

    #[error("escort distribution is degenerate: all reweighted masses vanish")]
    DegenerateEscort,

    #[error("invalid order {0}")]
    InvalidOrder(f64),

    #[error("order 0 is not allowed here")]
    ZeroOrder,

    #[error("value {value} at index {index} must be positive and finite")]
    NonPositiveValue { index: usize, value: f64 },

    #[error("value {value} at index {index} lies outside the averaging function's domain")]
    OutsideDomain { index: usize, value: f64 },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("all weights are zero")]
    AllZero,

    #[error("total mass {0} is not 1 within tolerance")]
    NotNormalized(f64),

    #[error("label {0:?} is missing from one of the measures")]
    LabelMismatch(String),

    #[error("support violation at label {label:?}: p > 0 where q = 0")]
    SupportViolation { label: String },

    #[error("supports differ at label {label:?}")]
    SupportMismatch { label: String },

    #[error("cross-entropy argument vanishes on the whole support")]
    DegenerateCrossEntropy,

    #[error("invalid logarithm base {0}: must be finite and > 1")]
    InvalidBase(f64),

    #[error("target probability {target} outside [{min}, {max}]")]
    TargetOutOfRange { target: f64, min: f64, max: f64 },

    #[error("bisection did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("invalid order grid: {0}")]
    InvalidGrid(String),

    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
