use crate::error::{Error, Result};

/// Limit estimate with an internal consistency measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    pub value: f64,
    /// Difference between the two highest-order extrapolants.
    pub consistency: f64,
}

/// Richardson extrapolation of `v(δ) → v∞` as `δ → 0`.
///
/// The samples are assumed to follow `v∞ + C₁δ^p + C₂δ^{2p} + …` and must
/// share a constant ratio between successive `δ` values for the higher
/// table columns to be exact; with arbitrary spacing each column still
/// removes the leading term using the local ratio.
pub fn extrapolate_limit(samples: &[(f64, f64)], p: f64) -> Result<Extrapolation> {
    if samples.len() < 3 {
        return Err(Error::Usage("extrapolation needs at least 3 samples".into()));
    }
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::Usage(format!("model power must be positive, got {p}")));
    }
    if samples[0].0 <= 0.0 || samples.windows(2).any(|w| !(w[1].0 < w[0].0 && w[1].0 > 0.0)) {
        return Err(Error::Usage("sample offsets must be positive and strictly decreasing".into()));
    }
    let deltas: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let mut column: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let mut previous_best = column[column.len() - 1];
    for level in 1..samples.len() {
        previous_best = column[column.len() - 1];
        let power = level as f64 * p;
        column = column
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                let f = (deltas[i + level - 1] / deltas[i + level]).powf(power);
                (f * w[1] - w[0]) / (f - 1.0)
            })
            .collect();
    }
    let value = column[0];
    Ok(Extrapolation {
        value,
        consistency: (value - previous_best).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_linear_model() {
        let s: Vec<(f64, f64)> = (0..5).map(|m| {
            let d = 2f64.powi(-m);
            (d, 1.0 + d)
        }).collect();
        assert!((extrapolate_limit(&s, 1.0).unwrap().value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_root_model() {
        let s: Vec<(f64, f64)> = (0..5).map(|m| {
            let d = 4f64.powi(-m);
            (d, 3.0 + 2.0 * d.sqrt())
        }).collect();
        assert!((extrapolate_limit(&s, 0.5).unwrap().value - 3.0).abs() < 1e-10);
    }

    #[test]
    fn exact_on_multi_term_model() {
        let s: Vec<(f64, f64)> = (0..6).map(|m| {
            let d = 0.3 * 2f64.powi(-m);
            (d, -1.5 + 0.7 * d.sqrt() - 2.0 * d + 0.4 * d.powf(1.5))
        }).collect();
        let e = extrapolate_limit(&s, 0.5).unwrap();
        assert!((e.value + 1.5).abs() < 1e-11);
    }

    #[test]
    fn usage_errors() {
        assert!(extrapolate_limit(&[(1.0, 1.0), (0.5, 1.0)], 1.0).is_err());
        assert!(extrapolate_limit(&[(1.0, 1.0), (2.0, 1.0), (0.5, 1.0)], 1.0).is_err());
        assert!(extrapolate_limit(&[(1.0, 1.0), (0.5, 1.0), (0.0, 1.0)], 1.0).is_err());
    }
}
