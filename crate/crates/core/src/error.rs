use thiserror::Error;

use crate::C64;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {z} lies within {tolerance:e} of a pole")]
    PoleProximity { z: C64, tolerance: f64 },
    #[error("malformed function: {0}")]
    MalformedFunction(String),
    #[error("basis index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("kernel denominator |1 - conj(w) z| = {0:e} is degenerate")]
    DegenerateDenominator(f64),

    #[error("no convergence after {nodes} nodes (last relative change {change:e})")]
    NoConvergence { nodes: usize, change: f64 },
    #[error("integrand is singular on the contour near {0}")]
    SingularityOnContour(C64),
    #[error("function has {0} pole(s) in the closed unit disk")]
    PoleInDisk(usize),

    #[error("line offset range {b_max} does not cover image radius {radius}")]
    InsufficientCoverage { b_max: f64, radius: f64 },

    #[error("smallest basis point modulus {0} is not below 1/sqrt(2)")]
    CriterionInapplicable(f64),
    #[error("coefficient {index} fell to {value:e}, below the representable budget")]
    BudgetUnderflow { index: usize, value: f64 },
    #[error("need {needed} Taylor coefficients, got {got}")]
    TooFewCoefficients { needed: usize, got: usize },
    #[error("truncation degree {n} gives dilation radius {r} outside (0, 1)")]
    SubcriticalDegree { n: usize, r: f64 },
    #[error("target evaluation failed on the contour: {0}")]
    ContourEvaluationFailure(Box<Error>),
    #[error("arc moment ({arc}, {order}) changed by {change:e} relative under node doubling")]
    QuadratureUnderResolved { arc: usize, order: usize, change: f64 },

    #[error("image curve diameter {0:e} is degenerate")]
    DegenerateImage(f64),
    #[error("target value lies within {0:e} of the boundary image")]
    ValueOnBoundary(f64),
    #[error("argument-principle integral {0} is not near an integer")]
    NonIntegerWinding(C64),

    #[error("family has an empty degree schedule")]
    EmptyFamily,
    #[error("generator failed at degree {degree}: {source}")]
    GeneratorFailure {
        degree: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
