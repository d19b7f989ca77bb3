//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the library's special functions or kernels.

#![allow(dead_code)]

use std::f64::consts::PI;

pub const EULER: f64 = 0.577_215_664_901_532_9;

/// K₀ and K₁ from the ascending series of K₀; K₁ = −K₀′ is obtained by
/// differentiating that series term by term.
pub fn bessel_series(z: f64) -> (f64, f64) {
    let t = z * z / 4.0;
    let lg = (z / 2.0).ln() + EULER;
    let (mut i0, mut i1) = (0.0, 0.0);
    let (mut harm_sum, mut harm_deriv) = (0.0, 0.0);
    let mut harmonic = 0.0;
    let mut fact2 = 1.0; // (k!)²
    let mut tk = 1.0; // t^k
    for k in 0..80 {
        if k > 0 {
            harmonic += 1.0 / k as f64;
            fact2 *= (k * k) as f64;
            tk *= t;
        }
        let term = tk / fact2;
        i0 += term;
        // I₁ = I₀′ = Σ 2k t^k/(z (k!)²)
        i1 += 2.0 * k as f64 * term / z;
        harm_sum += harmonic * term;
        harm_deriv += harmonic * 2.0 * k as f64 * term / z;
        if term < 1e-20 && k > 3 {
            break;
        }
    }
    let k0 = -lg * i0 + harm_sum;
    let k1 = i0 / z + lg * i1 - harm_deriv;
    (k0, k1)
}

/// Large-argument asymptotic series; accurate to ~1e-14 for z ≥ 15.
pub fn bessel_asymptotic(z: f64, nu: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..30 {
        let kf = k as f64;
        term *= (mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * z);
        if term.abs() < 1e-17 {
            break;
        }
        sum += term;
    }
    (PI / (2.0 * z)).sqrt() * (-z).exp() * sum
}

/// `K_ν(z) = ∫₀^∞ exp(−z cosh t) cosh(νt) dt` by the trapezoid rule, which
/// converges geometrically for this integrand.
pub fn bessel_integral(z: f64, nu: f64) -> f64 {
    let h = 0.05;
    let mut sum = 0.5 * (-z).exp();
    let mut k = 1;
    loop {
        let t = k as f64 * h;
        let arg = z * t.cosh();
        if arg > 745.0 {
            break;
        }
        sum += (-arg).exp() * (nu * t).cosh();
        k += 1;
    }
    sum * h
}

/// Five-point Gauss–Legendre on panels of width at most `width`.
pub fn gauss_legendre<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, width: f64) -> f64 {
    let r1 = (5.0 - 2.0 * (10.0f64 / 7.0).sqrt()).sqrt() / 3.0;
    let r2 = (5.0 + 2.0 * (10.0f64 / 7.0).sqrt()).sqrt() / 3.0;
    let w0 = 128.0 / 225.0;
    let w1 = (322.0 + 13.0 * 70f64.sqrt()) / 900.0;
    let w2 = (322.0 - 13.0 * 70f64.sqrt()) / 900.0;
    let panels = ((b - a) / width).ceil().max(1.0) as usize;
    let step = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let c = a + (p as f64 + 0.5) * step;
            let hh = 0.5 * step;
            hh * (w0 * f(c)
                + w1 * (f(c - hh * r1) + f(c + hh * r1))
                + w2 * (f(c - hh * r2) + f(c + hh * r2)))
        })
        .sum()
}

/// Cosine integral for large arguments from its auxiliary asymptotic series.
pub fn ci_large(y: f64) -> f64 {
    let y2 = y * y;
    let f = (1.0 - 2.0 / y2 + 24.0 / (y2 * y2) - 720.0 / (y2 * y2 * y2)) / y;
    let g = (1.0 - 6.0 / y2 + 120.0 / (y2 * y2) - 5040.0 / (y2 * y2 * y2)) / y2;
    f * y.sin() - g * y.cos()
}

/// The symbol written straight from its definition, with `q − s`
/// rationalised as `a/(q+s)`.
pub fn symbol(s: f64, n: f64, c2: f64) -> f64 {
    let a = 1.0 - n;
    let q = (s * s + a).sqrt();
    s / q * (2.0 * n * c2 * s * s * (a / (q + s)) + a * (a - c2) * q)
}

/// Plane kernel as a cosine transform of the symbol:
/// `K = (1/π)[norm ∫ s cos(xs) ds + ∫ (L − norm s) cos(xs) ds]`, the first
/// integral being −1/x². The second runs numerically to S = 4000 with the
/// `3/(4s) − 5a/(8s³)` tail of `(norm s − L)/(N c² a²)` added analytically.
pub fn plane_kernel_spectral(x: f64, n: f64, c2: f64) -> f64 {
    let a = 1.0 - n;
    let norm = a * a * (1.0 - c2);
    if n == 0.0 {
        return -norm / (PI * x * x);
    }
    let scale = n * c2 * a * a;
    let p = |s: f64| (norm * s - symbol(s, n, c2)) / scale;
    let cutoff = 4000.0;
    let body = gauss_legendre(|s| p(s) * (x * s).cos(), 0.0, cutoff, 0.05);
    let y = x * cutoff;
    let tail = 0.75 * (-ci_large(y)) - 0.625 * a * (-(y.sin()) / (x * cutoff.powi(3)));
    (-norm / (x * x) - scale * (body + tail)) / PI
}

/// J₀ by its power series; adequate for |x| ≤ 12.
pub fn bessel_j0(x: f64) -> f64 {
    let t = -x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..80 {
        term *= t / (k * k) as f64;
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// `N` values `start, start+step, …, stop` (inclusive).
pub fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    (0..count).map(|i| start + i as f64 * step).collect()
}
