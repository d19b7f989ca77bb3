//! Modified Bessel functions of the second kind, orders 0 and 1.
//!
//! Two regimes: the ascending series for `z <= 2` and Steed's continued
//! fraction (Temme's CF2) above. Both are accurate to a few ulps, so the
//! switch point is invisible at the 1e-12 level.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SERIES_LIMIT: f64 = 2.0;

/// A function value with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselEval {
    pub value: f64,
    pub abs_error_bound: f64,
}

fn check(function: &'static str, z: f64) -> Result<()> {
    if z.is_finite() && z > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain { function, value: z })
    }
}

/// K₀(z) for real z > 0.
pub fn bessel_k0(z: f64) -> Result<f64> {
    check("bessel_k0", z)?;
    Ok(k0_k1_unchecked(z).0)
}

/// K₁(z) for real z > 0.
pub fn bessel_k1(z: f64) -> Result<f64> {
    check("bessel_k1", z)?;
    Ok(k0_k1_unchecked(z).1)
}

/// Both K₀(z) and K₁(z); cheaper than two separate calls.
pub fn bessel_k0_k1(z: f64) -> Result<(f64, f64)> {
    check("bessel_k0_k1", z)?;
    Ok(k0_k1_unchecked(z))
}

/// K₀ together with an error bound. The bound is relative to the value
/// (a handful of ulps), which is below 1e-12 in absolute terms wherever
/// K₀ itself is below ~1e3.
pub fn bessel_k0_eval(z: f64) -> Result<BesselEval> {
    let value = bessel_k0(z)?;
    Ok(BesselEval {
        value,
        abs_error_bound: 16.0 * f64::EPSILON * value,
    })
}

/// K₁ together with an error bound; see [`bessel_k0_eval`].
pub fn bessel_k1_eval(z: f64) -> Result<BesselEval> {
    let value = bessel_k1(z)?;
    Ok(BesselEval {
        value,
        abs_error_bound: 16.0 * f64::EPSILON * value,
    })
}

pub(crate) fn k0_k1_unchecked(z: f64) -> (f64, f64) {
    if z <= SERIES_LIMIT {
        k0_k1_series(z)
    } else {
        k0_k1_continued_fraction(z)
    }
}

/// Digamma at positive integers: ψ(k+1) = H_k − γ.
fn psi_int(k: usize) -> f64 {
    (1..=k).map(|j| 1.0 / j as f64).sum::<f64>() - EULER_GAMMA
}

pub(crate) fn k0_k1_series(z: f64) -> (f64, f64) {
    let t = 0.25 * z * z;
    let log_half = (0.5 * z).ln();

    // term0 = t^k/(k!)^2, term1 = t^k/(k!(k+1)!)
    let mut term0 = 1.0;
    let mut term1 = 1.0;
    let mut psi_k1 = -EULER_GAMMA; // ψ(k+1)
    let mut i0 = 0.0;
    let mut i1_sum = 0.0;
    let mut k0_sum = 0.0;
    let mut k1_sum = 0.0;
    for k in 0..60 {
        let kf = k as f64;
        let psi_k2 = psi_k1 + 1.0 / (kf + 1.0);
        i0 += term0;
        i1_sum += term1;
        k0_sum += psi_k1 * term0;
        k1_sum += (psi_k1 + psi_k2) * term1;
        if term0 < 1e-18 * i0 && k > 2 {
            break;
        }
        term0 *= t / ((kf + 1.0) * (kf + 1.0));
        term1 *= t / ((kf + 1.0) * (kf + 2.0));
        psi_k1 = psi_k2;
    }
    let i1 = 0.5 * z * i1_sum;
    let k0 = -log_half * i0 + k0_sum;
    let k1 = 1.0 / z + log_half * i1 - 0.25 * z * k1_sum;
    (k0, k1)
}

fn k0_k1_continued_fraction(x: f64) -> (f64, f64) {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..1000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    h *= a1;
    let k0 = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

/// Digamma values exposed for the kernel series.
pub(crate) fn digamma_int(k: usize) -> f64 {
    psi_int(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonpositive_and_nonfinite() {
        for z in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(bessel_k0(z), Err(Error::Domain { .. })));
            assert!(matches!(bessel_k1(z), Err(Error::Domain { .. })));
        }
    }

    #[test]
    fn regimes_agree_at_seam() {
        for z in [1.9, 2.0, 2.1, 2.5] {
            let (s0, s1) = k0_k1_series(z);
            let (c0, c1) = k0_k1_continued_fraction(z);
            assert!((s0 - c0).abs() < 1e-12, "K0 at {z}: {s0} vs {c0}");
            assert!((s1 - c1).abs() < 1e-12, "K1 at {z}: {s1} vs {c1}");
        }
    }

    #[test]
    fn known_values() {
        // mpmath, 20 digits
        let cases = [
            (1e-8, 18.536_612_259_610_777, 99_999_999.999_999_9),
            (0.1, 2.427_069_024_702_016_4, 9.853_844_780_870_606),
            (1.0, 0.421_024_438_240_708_34, 0.601_907_230_197_234_6),
            (2.0, 0.113_893_872_749_533_44, 0.139_865_881_816_522_43),
            (10.0, 1.778_006_231_616_765e-5, 1.864_877_345_382_558_5e-5),
            (40.0, 8.392_861_100_099_567e-19, 8.497_131_954_861_039e-19),
        ];
        for (z, k0, k1) in cases {
            let (a, b) = bessel_k0_k1(z).unwrap();
            assert!(((a - k0) / k0).abs() < 1e-14, "K0({z}) = {a}");
            assert!(((b - k1) / k1).abs() < 1e-14, "K1({z}) = {b}");
        }
    }

    #[test]
    fn error_bound_small_on_working_range() {
        for z in [1e-8, 1e-3, 1.0, 50.0] {
            assert!(bessel_k0_eval(z).unwrap().abs_error_bound <= 1e-12);
        }
        assert!(bessel_k1_eval(1.0).unwrap().abs_error_bound <= 1e-12);
    }
}
