//! Symbol of the stress/opening relation and the convolution kernels built
//! from it.
//!
//! Writing `a = 1 − N`, `q(s) = √(s² + a)` and `norm = a²(1 − c²)`, the
//! symbol satisfies
//!
//! ```text
//! L(s)/s − norm = −N c² a² w(s),   w(s) = (2s + q) / (q (q + s)²),
//! ```
//!
//! where `w` is positive, equals `1/a` at the origin and decays like
//! `3/(4s²)`. Both regular kernels are cosine transforms of `w`
//! (times `s` for the plane problem), which is how they are evaluated here
//! without cancellation.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::material::PorousParams;
use crate::numerics::integrate_adaptive;
use crate::specfun::{digamma_int, k0_k1_unchecked};

/// Absolute tolerance for the regular penny kernel.
pub const PENNY_KERNEL_TOL: f64 = 1e-11;

/// Upper cut of the numerical part of the penny-kernel transform.
const PENNY_CUTOFF: f64 = 60.0;

/// Below this argument of the Bessel functions the regular plane kernel is
/// summed from its logarithmic series instead of the closed form.
const PLANE_SERIES_LIMIT: f64 = 2.0;

/// Material state plus the hypersingular strength `(1−N)²(1−c²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelContext {
    pub params: PorousParams,
    pub norm: f64,
}

impl KernelContext {
    pub fn new(params: PorousParams) -> Self {
        let a = 1.0 - params.n;
        Self {
            params,
            norm: a * a * (1.0 - params.c2),
        }
    }

    pub fn from_c2_n(c2: f64, n: f64) -> Result<Self> {
        Ok(Self::new(PorousParams::new(c2, n)?))
    }

    fn a(&self) -> f64 {
        1.0 - self.params.n
    }

    /// Prefactor N c²/(1 − c²) shared by both regular kernels.
    fn coupling_factor(&self) -> f64 {
        self.params.n * self.params.c2 / (1.0 - self.params.c2)
    }
}

/// `q(s) = √(s² + 1 − N)`.
pub fn q_sym(s: f64, n: f64) -> Result<f64> {
    if !(n.is_finite() && (0.0..1.0).contains(&n)) {
        return Err(Error::Domain { function: "q_sym", value: n });
    }
    if !(s >= 0.0 && s.is_finite()) {
        return Err(Error::Domain { function: "q_sym", value: s });
    }
    Ok((s * s + 1.0 - n).sqrt())
}

/// The symbol L(s) relating the transforms of stress and opening.
pub fn symbol_l(s: f64, ctx: &KernelContext) -> f64 {
    let a = ctx.a();
    let PorousParams { c2, n, .. } = ctx.params;
    let q = (s * s + a).sqrt();
    // q − s = a/(q + s) keeps the large-s behaviour exact.
    let q_minus_s = a / (q + s);
    s / q * (2.0 * n * c2 * s * s * q_minus_s + a * (a - c2) * q)
}

/// `w(s) = (2s + q)/(q (q + s)²)`; see the module docs.
pub(crate) fn decay_weight(s: f64, a: f64) -> f64 {
    let q = (s * s + a).sqrt();
    let qs = q + s;
    (2.0 * s + q) / (q * qs * qs)
}

/// The full plane-strain kernel K(x) in closed form through K₀ and K₁.
pub fn plane_kernel(x: f64, ctx: &KernelContext) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Singularity { kernel: "plane_kernel" });
    }
    let a = ctx.a();
    let PorousParams { c2, n, .. } = ctx.params;
    let x = x.abs();
    let ra = a.sqrt();
    let (k0, k1) = k0_k1_unchecked(ra * x);
    let x2 = x * x;
    let bracket = 6.0 / (x2 * x2)
        - 2.0 * ra * (3.0 / (x2 * x) + a / x) * k1
        - a * (a + 3.0 / x2) * k0;
    Ok((2.0 * n * c2 * bracket - a * (a - c2) / x2) / PI)
}

/// Regular remainder `K̂(x) = −(π/norm) K(x) − 1/x²` of the plane kernel.
///
/// Evaluated as `−N c²/(1−c²) · E(√(1−N)|x|)` with
/// `E(z) = 12/z⁴ − 4(3/z³ + 1/z)K₁(z) − 2(1 + 3/z²)K₀(z) + 1/z²`; for small
/// `z` the negative powers cancel exactly and `E` is summed as
/// `P(z) + ln(z/2) Q(z)` with power series `P`, `Q`.
pub fn plane_kernel_regular(x: f64, ctx: &KernelContext) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Singularity { kernel: "plane_kernel_regular" });
    }
    if ctx.params.n == 0.0 {
        return Ok(0.0);
    }
    let z = ctx.a().sqrt() * x.abs();
    Ok(-ctx.coupling_factor() * plane_remainder(z))
}

pub(crate) fn plane_remainder(z: f64) -> f64 {
    if z <= PLANE_SERIES_LIMIT {
        plane_remainder_series(z)
    } else {
        plane_remainder_closed(z)
    }
}

pub(crate) fn plane_remainder_closed(z: f64) -> f64 {
    let (k0, k1) = k0_k1_unchecked(z);
    let z2 = z * z;
    12.0 / (z2 * z2) - 4.0 * (3.0 / (z2 * z) + 1.0 / z) * k1 - 2.0 * (1.0 + 3.0 / z2) * k0
        + 1.0 / z2
}

struct RemainderSeries {
    /// coefficients of t^k in P, t = z²/4
    regular: Vec<f64>,
    /// coefficients of t^k in Q
    log: Vec<f64>,
}

fn remainder_series() -> &'static RemainderSeries {
    static SERIES: OnceLock<RemainderSeries> = OnceLock::new();
    SERIES.get_or_init(|| {
        const TERMS: usize = 30;
        // a_k = 1/(k!(k+1)!), b_k = 1/(k!)², c_k = (ψ(k+1)+ψ(k+2)) a_k, d_k = ψ(k+1) b_k
        let mut a = Vec::with_capacity(TERMS + 1);
        let mut b = Vec::with_capacity(TERMS + 1);
        let (mut fk, mut fk1) = (1.0f64, 1.0f64);
        for k in 0..=TERMS {
            if k > 0 {
                fk *= k as f64;
                fk1 *= (k + 1) as f64;
            }
            a.push(1.0 / (fk * fk1));
            b.push(1.0 / (fk * fk));
        }
        let c: Vec<f64> = (0..=TERMS)
            .map(|k| (digamma_int(k) + digamma_int(k + 1)) * a[k])
            .collect();
        let d: Vec<f64> = (0..=TERMS).map(|k| digamma_int(k) * b[k]).collect();
        let regular = (0..TERMS)
            .map(|k| (c[k] - 2.0 * d[k]) + 0.75 * (c[k + 1] - 2.0 * d[k + 1]))
            .collect();
        let log = (0..TERMS)
            .map(|k| 2.0 * (b[k] - a[k]) + 1.5 * (b[k + 1] - a[k + 1]))
            .collect();
        RemainderSeries { regular, log }
    })
}

pub(crate) fn plane_remainder_series(z: f64) -> f64 {
    let series = remainder_series();
    let t = 0.25 * z * z;
    let horner = |coef: &[f64]| coef.iter().rev().fold(0.0, |acc, c| acc * t + c);
    horner(&series.regular) + (0.5 * z).ln() * horner(&series.log)
}

/// Regular penny kernel `K*(x) = ∫₀^∞ [L(s)/(norm·s) − 1] cos(xs) ds`.
///
/// The integrand is `−N c²/(1−c²) · w(s)`. Two rational terms with known
/// cosine transforms, `(3/4)/(s²+a)` and `(a/8)/(s²+a)²`, absorb the
/// `s⁻²` and `s⁻⁴` tail of `w`; the `O(s⁻⁶)` remainder is integrated
/// adaptively on `[0, 60]` and its tail beyond is below 1e-12.
pub fn penny_kernel_regular(x: f64, ctx: &KernelContext) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain { function: "penny_kernel_regular", value: x });
    }
    if ctx.params.n == 0.0 {
        return Ok(0.0);
    }
    Ok(-ctx.coupling_factor() * decay_weight_transform(x.abs(), ctx.a())?)
}

/// `∫₀^∞ w(s) cos(xs) ds` for `x ≥ 0`.
pub(crate) fn decay_weight_transform(x: f64, a: f64) -> Result<f64> {
    let beta = a.sqrt();
    let decay = (-beta * x).exp();
    let rational = 0.75 * PI * decay / (2.0 * beta)
        + 0.125 * a * PI * (1.0 + beta * x) * decay / (4.0 * beta * beta * beta);

    let residual = |s: f64| {
        let d = s * s + a;
        (decay_weight(s, a) - 0.75 / d - 0.125 * a / (d * d)) * (x * s).cos()
    };
    let width = (PI / (4.0 * x.max(1.0))).min(1.0);
    let r = integrate_adaptive(residual, 0.0, PENNY_CUTOFF, width, PENNY_KERNEL_TOL)?;
    Ok(rational + r.value)
}

/// Bound on `∫_S^∞ |w − rational terms| ds`, using the leading `(3a²/64)s⁻⁶`
/// coefficient with a factor two of headroom.
pub fn penny_tail_bound(a: f64) -> f64 {
    2.0 * (3.0 * a * a / 64.0) / (5.0 * PENNY_CUTOFF.powi(5))
}
