//! Non-regularised incomplete beta function B_z(a, b).

use super::gamma::{gamma_sign, ln_gamma_abs};
use crate::error::{Error, Result};

/// B_z(a, b) = int_0^z t^{a-1} (1-t)^{b-1} dt for 0 <= z <= 1.
///
/// Negative non-integer `a` is handled by analytic continuation of the
/// defining series z^a sum (1-b)_k z^k / (k! (a+k)).
pub fn inc_beta(z: f64, a: f64, b: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain { function: "inc_beta", detail: format!("z = {z} outside [0, 1]") });
    }
    if a <= 0.0 && a.fract() == 0.0 {
        return Err(Error::Pole { function: "inc_beta", at: a });
    }
    if z == 0.0 {
        return if a > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::Domain { function: "inc_beta", detail: "z = 0 with a < 0 diverges".into() })
        };
    }
    if z <= 0.5 {
        return series(z, a, b);
    }
    if b <= 0.0 && b.fract() == 0.0 {
        return Err(Error::Pole { function: "inc_beta", at: b });
    }
    if z == 1.0 && b <= 0.0 {
        return Err(Error::Domain { function: "inc_beta", detail: "z = 1 with b <= 0 diverges".into() });
    }
    let complete = complete_beta(a, b)?;
    let tail = if z == 1.0 { 0.0 } else { series(1.0 - z, b, a)? };
    Ok(complete - tail)
}

/// Complete beta function, continued through the gamma reflection formula.
pub fn complete_beta(a: f64, b: f64) -> Result<f64> {
    let s = a + b;
    if s <= 0.0 && s.fract() == 0.0 {
        return Ok(0.0);
    }
    let ln = ln_gamma_abs(a)? + ln_gamma_abs(b)? - ln_gamma_abs(s)?;
    Ok(gamma_sign(a) * gamma_sign(b) * gamma_sign(s) * ln.exp())
}

fn series(z: f64, a: f64, b: f64) -> Result<f64> {
    let mut c = 1.0; // (1-b)_k z^k / k!
    let mut sum = 1.0 / a;
    for k in 1..2000 {
        let kf = k as f64;
        c *= (kf - b) * z / kf;
        let t = c / (a + kf);
        sum += t;
        if t.abs() <= 1e-17 * sum.abs() {
            return Ok(z.powf(a) * sum);
        }
    }
    Err(Error::NonConvergence { what: "inc_beta series", iterations: 2000, estimate: z.powf(a) * sum, error: f64::NAN })
}
