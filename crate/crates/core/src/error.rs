use thiserror::Error;

use crate::rational::Rational;
use crate::slope::Slope;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a slope: (0, 0)")]
    NotASlope,
    #[error("not primitive: ({p}, {q})")]
    NotPrimitive { p: i64, q: i64 },
    #[error("slope component out of range")]
    SlopeOverflow,
    #[error("infinite slope")]
    InfiniteSlope,
    #[error("cannot parse slope {0:?}")]
    SlopeParse(String),
    #[error("cannot parse rational {0:?}")]
    RationalParse(String),
    #[error("negative radicand {0}")]
    NegativeRadicand(Rational),
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("maximal flag violates length ≥ 1 (systole squared {0})")]
    MaximalViolation(Rational),
    #[error("weight must be positive even, got {weight} on {slope}")]
    InvalidWeight { slope: Slope, weight: i64 },
    #[error("duplicate slope {0}")]
    DuplicateSlope(Slope),
    #[error("norm needs at least two distinct slopes")]
    DegenerateNorm,
    #[error("boundary slope set has no finite slope")]
    NoFiniteBoundarySlope,
    #[error("diameter undefined: fewer than two finite boundary slopes")]
    DiameterUndefined,
    #[error("non-negative Euler characteristic {0}")]
    NonNegativeEuler(i64),
    #[error("boundary component count must be positive")]
    NoBoundaryComponents,
    #[error("norm slope {0} is not a boundary slope")]
    NormSlopeNotBoundary(Slope),
    #[error("surface slope {0} is not a boundary slope")]
    SurfaceSlopeNotBoundary(Slope),
    #[error("{0} is not a boundary slope")]
    NotBoundarySlope(Slope),
    #[error("surface slope {surface} does not match {slope}")]
    SlopeMismatch { slope: Slope, surface: Slope },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{}", join_errors(.0))]
    Invalid(Vec<Error>),
}

fn join_errors(errors: &[Error]) -> String {
    errors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
