/// Stress concentration factor at the crack edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScfResult {
    /// Normalised factor `lim |σ|√(r²−b²) / (μ b (1−c²))`.
    pub k: f64,
    /// Classical (N = 0) reference at the same b, c² and discretisation.
    pub k0: f64,
    /// `k / k0`
    pub ratio: f64,
    /// Mesh cells (plane) or quadrature intervals (penny).
    pub n_used: usize,
    /// Relative consistency estimate of the limit extraction.
    pub est_error: f64,
}

/// Relative disagreement above which an extraction is reported as suspect.
pub const EXTRACTION_WARNING: f64 = 0.05;

impl ScfResult {
    pub(crate) fn new(k: f64, k0: f64, n_used: usize, est_error: f64) -> Self {
        Self {
            k,
            k0,
            ratio: k / k0,
            n_used,
            est_error,
        }
    }

    /// True when the limit extraction failed its internal consistency check.
    pub fn is_suspect(&self) -> bool {
        !(self.est_error <= EXTRACTION_WARNING)
    }
}
