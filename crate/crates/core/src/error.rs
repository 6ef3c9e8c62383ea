use thiserror::Error;

use crate::exactnum::FieldKind;
use crate::exprio::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("cyclotomic order {order} exceeds the configured limit {limit}")]
    OrderTooLarge { order: u32, limit: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldKind, right: FieldKind },
    #[error("cannot embed an element of {from} into {to}")]
    NotEmbeddable { from: FieldKind, to: FieldKind },
    #[error("{0} contains no primitive root of unity of the requested order")]
    NoRootOfUnity(FieldKind),

    #[error("{0}: zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0}: constant function")]
    ConstantFunction(&'static str),
    #[error("degenerate Möbius transformation (determinant 0)")]
    DegenerateMoebius,
    #[error("points must be pairwise distinct: {0} repeated")]
    RepeatedPoint(String),

    #[error("duplicate candidate value {0}")]
    DuplicateCandidate(String),
    #[error("the two functions are identical")]
    IdenticalFunctions,
    #[error("rational-root search needs coefficients in ℚ")]
    NonRationalCoefficients,
    #[error("coefficient {0} too large for rational-root search")]
    CoefficientTooLarge(String),

    #[error("repeated value {0}")]
    RepeatedValue(String),
    #[error("value 0 is not admissible (apply a Möbius normalization first)")]
    ZeroValue,
    #[error("need at least {needed} values, got {got}")]
    TooFewValues { needed: usize, got: usize },
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("surface is not hyperbolic (Euler characteristic {chi})")]
    NotHyperbolic { chi: i64 },
    #[error("genus 0 forces gonality 1, got d = {0}")]
    GenusZeroGonality(u64),
    #[error("expected {expected} puncture points, got {got}")]
    PointCountMismatch { expected: usize, got: usize },
    #[error("parameters give a negative puncture count r = {0}")]
    NegativePunctures(i64),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
