use thiserror::Error;

/// Errors produced by the Cayley-Klein machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CkError {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("index {index} out of range for N = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid generator index ({a},{b}): need a < b <= N")]
    InvalidGenerator { a: usize, b: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point violates its ambient constraint (residual {residual:e})")]
    ConstraintViolation { residual: f64 },

    #[error("point outside the chart domain (pivot coordinate {pivot:e})")]
    ChartDomain { pivot: f64 },

    #[error("point on the singular locus of the metric (1 + k1|p|^2 = {value:e})")]
    SingularLocus { value: f64 },

    #[error("main metric is degenerate for this signature")]
    DegenerateMetric,

    #[error("tangent plane is degenerate (Gram determinant {value:e})")]
    DegeneratePlane { value: f64 },

    #[error("unsupported dimension N = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },

    #[error("points are linearly dependent and span no line")]
    DegeneratePair,

    #[error("bivector has non-positive ambient norm {norm:e}")]
    NullNorm { norm: f64 },

    #[error("no real point of the space in the chart patch for these coordinates")]
    NoRealSolution,

    #[error("invalid selector: {0}")]
    InvalidSelector(String),

    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, CkError>;
