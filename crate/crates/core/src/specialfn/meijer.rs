//! Meijer G^{4,0}_{4,4} with the parameter set that arises for the isosceles
//! right triangle, evaluated by its Mellin-Barnes integral.
//!
//! The vertical Mellin-Barnes line converges only conditionally for these
//! parameters (the integrand decays like 1/|t|), so the contour is bent into
//! the parabola s(t) = c + alpha t^2 + i t, which keeps every pole
//! b_j + k on its right and along which z^s decays like a Gaussian for z < 1.
//!
//! Close to z = 1 that decay needs |s| ~ 1/|ln z|, beyond double precision
//! phase resolution, so there the vertical line is used after subtracting
//! the first two terms of the large-s expansion of the gamma ratio,
//! 1/(-s) + C1/((-s)(1-s)), whose inverse transforms are 1 and C1 (1 - z).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::gamma::ln_gamma_complex;
use crate::error::{Error, Result};
use crate::quadrature::gauss_kronrod::gk_adaptive;

/// Upper parameters a_1..a_4 and lower parameters b_1..b_4.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeijerG4044Params {
    pub a: [f64; 4],
    pub b: [f64; 4],
}

impl MeijerG4044Params {
    pub const ISOSCELES: MeijerG4044Params = MeijerG4044Params {
        a: [-1.0 / 6.0, 1.0 / 6.0, 0.5, 0.5],
        b: [-0.25, 0.0, 0.0, 0.25],
    };

    /// Validates a parameter set; only the isosceles set is implemented.
    pub fn new(a: [f64; 4], b: [f64; 4]) -> Result<Self> {
        let want = Self::ISOSCELES;
        let close = |x: &[f64; 4], y: &[f64; 4]| x.iter().zip(y).all(|(u, v)| (u - v).abs() < 1e-14);
        if close(&a, &want.a) && close(&b, &want.b) {
            Ok(want)
        } else {
            Err(Error::Domain {
                function: "meijer_g_4044",
                detail: format!("unsupported parameters a = {a:?}, b = {b:?}"),
            })
        }
    }
}

const CONTOUR_SHIFT: f64 = -0.375;
const CONTOUR_CURVATURE: f64 = 1.0;

/// G^{4,0}_{4,4}(z | a; b) with the isosceles parameters, for 0 < z < 1.
pub fn meijer_g_4044(z: f64) -> Result<f64> {
    meijer_g_4044_with(&MeijerG4044Params::ISOSCELES, z)
}

pub fn meijer_g_4044_with(params: &MeijerG4044Params, z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain { function: "meijer_g_4044", detail: format!("z = {z} outside (0, 1)") });
    }
    if z > NEAR_ONE {
        return near_one(params, z);
    }
    let lz = z.ln();
    // for small z, z^c / G ~ z^(c + 1/4) would cancel badly; hug the pole at -1/4
    let c = -0.25 - (CONTOUR_SHIFT + 0.25).abs().min(1.0 / -lz);
    let alpha = CONTOUR_CURVATURE;
    let integrand = |t: f64| -> f64 {
        let s = Complex64::new(c + alpha * t * t, t);
        let ds = Complex64::new(2.0 * alpha * t, 1.0);
        (ln_integrand(params, s, lz).exp() * ds).im
    };
    // |z^s| = z^c exp(-alpha |ln z| t^2): stop once that factor is below e^-46
    let t_max = (46.0 / (alpha * -lz)).sqrt().max(1.0);
    let (total, err, ok) = integrate_panels(&integrand, t_max, 1e-14, 1e-11);
    finish(total / PI, err / PI, ok)
}

const NEAR_ONE: f64 = 0.99;

fn ln_integrand(params: &MeijerG4044Params, s: Complex64, lz: f64) -> Complex64 {
    let mut lnf = s * lz;
    for j in 0..4 {
        lnf += ln_gamma_complex(params.b[j] - s) - ln_gamma_complex(params.a[j] - s);
    }
    lnf
}

fn near_one(params: &MeijerG4044Params, z: f64) -> Result<f64> {
    let lz = z.ln();
    let c = CONTOUR_SHIFT;
    // Gamma ratio ~ w^(sum b - sum a) (1 + c1 / w) with w = -s
    let sum_sq = |v: &[f64; 4]| v.iter().map(|x| x * x - x).sum::<f64>();
    let c1 = 0.5 * (sum_sq(&params.b) - sum_sq(&params.a));
    let series = stirling_difference(params);
    let integrand = |t: f64| -> f64 {
        let s = Complex64::new(c, t);
        let w = -s;
        let rem = if t.abs() < ASYMPTOTIC_FROM {
            ln_integrand(params, s, 0.0).exp() - 1.0 / w - c1 / (w * (w + 1.0))
        } else {
            // the log-gamma differences are of size t ln t here, so the
            // direct form loses digits; the expansion in 1/w does not
            let inv = 1.0 / w;
            let mut e = Complex64::new(0.0, 0.0);
            for d in series.iter().rev() {
                e = (e + d) * inv;
            }
            inv * (expm1(e) - c1 / (w + 1.0))
        };
        (rem * (s * lz).exp()).re
    };
    // the remainder decays like t^-3
    let (total, err, ok) = integrate_panels(&integrand, 1e5, 1e-14, 1e-12);
    finish(1.0 + c1 * (1.0 - z) + total / PI, err / PI, ok)
}

/// |Im s| beyond which the gamma ratio is summed from its expansion.
const ASYMPTOTIC_FROM: f64 = 32.0;
const STIRLING_TERMS: usize = 12;

/// Coefficients d_k of sum_j [ln Gamma(w + b_j) - ln Gamma(w + a_j)] + ln w
/// = sum_k d_k w^-k, from the Stirling series with Bernoulli polynomials.
fn stirling_difference(params: &MeijerG4044Params) -> [f64; STIRLING_TERMS] {
    // Bernoulli numbers B_0..B_12
    const B: [f64; STIRLING_TERMS + 1] = [
        1.0,
        -0.5,
        1.0 / 6.0,
        0.0,
        -1.0 / 30.0,
        0.0,
        1.0 / 42.0,
        0.0,
        -1.0 / 30.0,
        0.0,
        5.0 / 66.0,
        0.0,
        -691.0 / 2730.0,
    ];
    let bernoulli_poly = |n: usize, x: f64| {
        let mut binom = 1.0;
        let mut sum = 0.0;
        for (k, b) in B.iter().enumerate().take(n + 1) {
            sum += binom * b * x.powi((n - k) as i32);
            binom *= (n - k) as f64 / (k + 1) as f64;
        }
        sum
    };
    let mut d = [0.0; STIRLING_TERMS];
    for (i, dk) in d.iter_mut().enumerate() {
        let k = i + 1;
        let diff: f64 =
            (0..4).map(|j| bernoulli_poly(k + 1, params.b[j]) - bernoulli_poly(k + 1, params.a[j])).sum();
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        *dk = sign * diff / (k * (k + 1)) as f64;
    }
    d
}

fn expm1(z: Complex64) -> Complex64 {
    if z.norm() > 1e-3 {
        return z.exp() - 1.0;
    }
    let mut term = z;
    let mut sum = z;
    for k in 2..10 {
        term *= z / k as f64;
        sum += term;
    }
    sum
}

fn integrate_panels<F: Fn(f64) -> f64>(f: &F, t_max: f64, abs_tol: f64, rel_tol: f64) -> (f64, f64, bool) {
    let mut knots = vec![0.0, 0.5, 1.0];
    while *knots.last().unwrap() < t_max {
        let next = (knots.last().unwrap() * 2.0).min(t_max);
        knots.push(next);
    }
    let mut total = 0.0;
    let mut err = 0.0;
    let mut ok = true;
    for w in knots.windows(2) {
        let r = gk_adaptive(f, w[0], w[1], abs_tol, rel_tol, 500);
        total += r.value;
        err += r.error_estimate;
        ok &= r.converged;
    }
    (total, err, ok)
}

fn finish(value: f64, err: f64, ok: bool) -> Result<f64> {
    if !ok && err > 1e-8 * value.abs() {
        return Err(Error::NonConvergence { what: "meijer_g_4044 contour", iterations: 0, estimate: value, error: err });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contours_agree_at_switch() {
        let p = MeijerG4044Params::ISOSCELES;
        for z in [0.95f64, 0.99, 0.995] {
            let lz = z.ln();
            let integrand = |t: f64| -> f64 {
                let s = Complex64::new(CONTOUR_SHIFT + t * t, t);
                (ln_integrand(&p, s, lz).exp() * Complex64::new(2.0 * t, 1.0)).im
            };
            let (par, _, _) = integrate_panels(&integrand, (46.0 / -lz).sqrt(), 1e-14, 1e-12);
            let near = near_one(&p, z).unwrap();
            assert!((par / PI - near).abs() < 1e-9, "z={z}: {} vs {near}", par / PI);
        }
    }

    #[test]
    fn rejects_other_parameters() {
        assert!(MeijerG4044Params::new([0.0; 4], [0.0; 4]).is_err());
        assert!(MeijerG4044Params::new(MeijerG4044Params::ISOSCELES.a, MeijerG4044Params::ISOSCELES.b).is_ok());
        assert!(meijer_g_4044(1.0).is_err());
        assert!(meijer_g_4044(0.0).is_err());
    }
}
