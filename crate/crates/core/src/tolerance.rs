/// Numerical thresholds used when validating inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Minimum `|x^0|` (rank one) or `|x^01|` (rank two) inside a Beltrami chart.
    pub chart: f64,
    /// Maximum residual accepted for ambient constraints on input points.
    pub constraint: f64,
    /// Minimum `|1 + k1 |p|^2|` away from the metric singular locus.
    pub singular: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { chart: 1e-10, constraint: 1e-9, singular: 1e-12 }
    }
}

impl Tolerances {
    /// Every threshold set to the same value.
    pub fn uniform(value: f64) -> Self {
        Self { chart: value, constraint: value, singular: value }
    }
}
