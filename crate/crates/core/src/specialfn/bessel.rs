//! Bessel functions of the first kind for real order, plus the large-argument
//! Y0 used by the Struve function.

use std::f64::consts::PI;

use super::gamma::{gamma, rgamma};
use crate::error::{Error, Result};

/// Bessel function J_nu(x) for real order nu >= 0.
///
/// Negative x is accepted for integer orders (parity), rejected otherwise.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::Domain { function: "bessel_j", detail: format!("order {nu} must be >= 0") });
    }
    if !x.is_finite() {
        return Err(Error::Domain { function: "bessel_j", detail: format!("argument {x}") });
    }
    if x < 0.0 {
        if nu.fract() != 0.0 {
            return Err(Error::Domain {
                function: "bessel_j",
                detail: "negative argument with non-integer order".into(),
            });
        }
        let sign = if (nu as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * j_nonneg(nu, -x));
    }
    Ok(j_nonneg(nu, x))
}

pub(crate) fn j_nonneg(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if x <= 5.0 || x * x <= 4.0 * (nu + 1.0) {
        series(nu, x)
    } else if x >= 25.0 && x >= nu * nu {
        let (p, q) = hankel_pq(nu, x);
        let chi = x - (0.5 * nu + 0.25) * PI;
        (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
    } else {
        miller(nu, x)
    }
}

fn series(nu: f64, x: f64) -> f64 {
    let h = 0.5 * x;
    let q = -h * h;
    // (x/2)^nu / Gamma(nu + 1), computed in logs when it would overflow
    let lead = if nu < 100.0 {
        h.powf(nu) * rgamma(nu + 1.0)
    } else {
        (nu * h.ln() - statrs::function::gamma::ln_gamma(nu + 1.0)).exp()
    };
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

/// Hankel asymptotic factors P(nu, x), Q(nu, x).
pub(crate) fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if a.abs() > prev || a == 0.0 {
            break;
        }
        prev = a.abs();
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        if a.abs() < 1e-17 {
            break;
        }
    }
    (p, q)
}

/// Miller backward recurrence with the Neumann-sum normalisation
/// sum_k (nu0 + 2k) Gamma(nu0 + k) / k! J_{nu0+2k}(x) = (x/2)^nu0.
fn miller(nu: f64, x: f64) -> f64 {
    let n = nu.floor() as usize;
    let nu0 = nu - n as f64;
    let top = nu.max(x);
    let start = (top + 30.0 + 12.0 * top.cbrt()).ceil() as usize;
    let start = start + (start % 2);

    let mut jp1 = 0.0;
    let mut j = 1e-300;
    let mut target = 0.0;
    let mut norm = 0.0;

    // (nu0 + 2k) Gamma(nu0 + k) / k!; equals 1 at k = 0 and 2 for integer orders
    let coeffs: Vec<f64> = if nu0 == 0.0 {
        Vec::new()
    } else {
        let mut g = 1.0 / rgamma(nu0 + 1.0);
        let mut v = Vec::with_capacity(start / 2 + 1);
        v.push(g);
        for k in 1..=start / 2 {
            if k > 1 {
                g *= (nu0 + (k - 1) as f64) / k as f64;
            }
            v.push((nu0 + 2.0 * k as f64) * g);
        }
        v
    };
    let coeff = |k: usize| -> f64 {
        if nu0 == 0.0 {
            if k == 0 { 1.0 } else { 2.0 }
        } else {
            coeffs[k]
        }
    };

    for i in (0..=start).rev() {
        if i == n {
            target = j;
        }
        if i % 2 == 0 {
            norm += coeff(i / 2) * j;
        }
        if i == 0 {
            break;
        }
        let order = nu0 + i as f64;
        let jm1 = 2.0 * order / x * j - jp1;
        jp1 = j;
        j = jm1;
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp1 *= 1e-250;
            target *= 1e-250;
            norm *= 1e-250;
        }
    }
    let scale = if nu0 == 0.0 { 1.0 } else { (0.5 * x).powf(nu0) };
    target * scale / norm
}

/// Y0(x) for x >= 20 by the Hankel expansion.
pub(crate) fn bessel_y0_large(x: f64) -> f64 {
    debug_assert!(x >= 20.0);
    let (p, q) = hankel_pq(0.0, x);
    let chi = x - 0.25 * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.sin() + q * chi.cos())
}

/// n-th positive zero of J_m (n >= 1).
pub fn bessel_j_zero(m: u32, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain { function: "bessel_j_zero", detail: "zero index starts at 1".into() });
    }
    let nu = m as f64;
    let f = |x: f64| j_nonneg(nu, x);
    // J_m has no zeros in (0, m]; consecutive zeros are more than pi apart.
    let step = 1.0;
    let mut a = if m == 0 { 1.0 } else { nu };
    let mut fa = f(a);
    let mut found = 0;
    let limit = nu + 4.0 * n as f64 + 100.0 + 2.0 * std::f64::consts::PI * n as f64;
    while a < limit {
        let b = a + step;
        let fb = f(b);
        if fa == 0.0 {
            found += 1;
            if found == n {
                return Ok(a);
            }
        } else if fa * fb < 0.0 {
            found += 1;
            if found == n {
                return Ok(polish(nu, a, b));
            }
        }
        a = b;
        fa = fb;
    }
    Err(Error::NonConvergence { what: "bessel_j_zero scan", iterations: found as usize, estimate: a, error: f64::NAN })
}

fn polish(nu: f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = j_nonneg(nu, a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if b - a <= 4.0 * f64::EPSILON * mid {
            break;
        }
        let fm = j_nonneg(nu, mid);
        if fm == 0.0 {
            return mid;
        }
        if fa * fm < 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    let mut x = 0.5 * (a + b);
    // Newton with J_m' = J_{m-1} - (m/x) J_m, or -J_1 for m = 0
    for _ in 0..2 {
        let jx = j_nonneg(nu, x);
        let d = if nu == 0.0 { -j_nonneg(1.0, x) } else { j_nonneg(nu - 1.0, x) - nu / x * jx };
        if d != 0.0 {
            let step = jx / d;
            if step.abs() < b - a + 1e-12 * x {
                x -= step;
            }
        }
    }
    x
}

/// `Gamma(nu + 1)` helper used by tests of small-argument limits.
#[allow(dead_code)]
pub(crate) fn small_x_leading(nu: f64, x: f64) -> Result<f64> {
    Ok((0.5 * x).powf(nu) / gamma(nu + 1.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regimes_agree_at_switch_points() {
        for &nu in &[0.0, 1.0, 2.5, 10.0] {
            let x = 25.0_f64.max(nu * nu) + 1e-9;
            let h = j_nonneg(nu, x);
            let m = miller(nu, x);
            assert!((h - m).abs() < 1e-11, "nu={nu}: {h} vs {m}");
        }
        for &nu in &[0.0, 0.5, 3.0] {
            let s = series(nu, 5.0);
            let m = miller(nu, 5.0);
            assert!((s - m).abs() < 1e-13, "nu={nu}: {s} vs {m}");
        }
    }

    #[test]
    fn small_argument_limit() {
        let x = 1e-6;
        let v = bessel_j(3.5, x).unwrap();
        let lead = small_x_leading(3.5, x).unwrap();
        assert!((v / lead - 1.0).abs() < 1e-10);
    }

    #[test]
    fn negative_argument_rules() {
        assert!((bessel_j(1.0, -2.0).unwrap() + bessel_j(1.0, 2.0).unwrap()).abs() < 1e-16);
        assert!(bessel_j(0.5, -2.0).is_err());
        assert!(bessel_j(-1.0, 2.0).is_err());
    }
}
