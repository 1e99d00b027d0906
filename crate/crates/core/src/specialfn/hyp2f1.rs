//! Gauss hypergeometric function 2F1(a, b; c; z) on -1/2 < z < 1.
//!
//! Direct series for z <= 1/2; above that the 1 - z connection formulas,
//! including the logarithmic cases when c - a - b is an integer.

use super::gamma::{digamma, gamma, rgamma};
use crate::error::{Error, Result};

const MAX_TERMS: usize = 5000;

pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if !(z > -0.5 && z < 1.0) {
        return Err(Error::Domain { function: "hyp2f1", detail: format!("z = {z} outside (-1/2, 1)") });
    }
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::Pole { function: "hyp2f1", at: c });
    }
    let terminating = |x: f64| x <= 0.0 && x.fract() == 0.0;
    if z <= 0.5 || terminating(a) || terminating(b) {
        return gauss_series(a, b, c, z);
    }
    let w = 1.0 - z;
    let s = c - a - b;
    let m = s.round();
    if (s - m).abs() > 1e-9 {
        let t1 = gamma(c)? * gamma(s)? * rgamma(c - a) * rgamma(c - b) * gauss_series(a, b, 1.0 - s, w)?;
        let t2 = if terminating(a) || terminating(b) {
            0.0
        } else {
            w.powf(s) * gamma(c)? * gamma(-s)? * rgamma(a) * rgamma(b) * gauss_series(c - a, c - b, 1.0 + s, w)?
        };
        return Ok(t1 + t2);
    }
    if m >= 0.0 {
        log_case_nonneg(a, b, c, m as usize, w)
    } else {
        log_case_neg(a, b, c, (-m) as usize, w)
    }
}

fn gauss_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut t = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        t *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += t;
        if t == 0.0 || t.abs() <= 1e-17 * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence { what: "2F1 series", iterations: MAX_TERMS, estimate: sum, error: t.abs() })
}

/// c = a + b + m with integer m >= 0.
fn log_case_nonneg(a: f64, b: f64, c: f64, m: usize, w: f64) -> Result<f64> {
    let mf = m as f64;
    let mut finite = 0.0;
    if m > 0 {
        let mut t = 1.0;
        for n in 0..m {
            finite += t;
            let nf = n as f64;
            t *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
        }
        finite *= gamma(mf)? * gamma(c)? * rgamma(a + mf) * rgamma(b + mf);
    }
    let lw = w.ln();
    // digamma arguments advance by one per term
    let mut psi_n1 = digamma(1.0)?;
    let mut psi_nm1 = digamma(mf + 1.0)?;
    let mut psi_a = digamma(a + mf)?;
    let mut psi_b = digamma(b + mf)?;
    let mut coef = 1.0 / factorial(m);
    let mut sum = 0.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let t = coef * (lw - psi_n1 - psi_nm1 + psi_a + psi_b);
        sum += t;
        if n > 2 && t.abs() <= 1e-17 * sum.abs() {
            break;
        }
        coef *= (a + mf + nf) * (b + mf + nf) / ((nf + 1.0) * (nf + mf + 1.0)) * w;
        psi_n1 += 1.0 / (nf + 1.0);
        psi_nm1 += 1.0 / (nf + mf + 1.0);
        psi_a += 1.0 / (a + mf + nf);
        psi_b += 1.0 / (b + mf + nf);
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(finite - sign * w.powi(m as i32) * gamma(c)? * rgamma(a) * rgamma(b) * sum)
}

/// c = a + b - m with integer m > 0.
fn log_case_neg(a: f64, b: f64, c: f64, m: usize, w: f64) -> Result<f64> {
    let mf = m as f64;
    let mut finite = 0.0;
    let mut t = 1.0;
    for n in 0..m {
        finite += t;
        let nf = n as f64;
        t *= (a - mf + nf) * (b - mf + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
    }
    finite *= gamma(mf)? * gamma(c)? * rgamma(a) * rgamma(b) * w.powi(-(m as i32));

    let lw = w.ln();
    let mut psi_n1 = digamma(1.0)?;
    let mut psi_nm1 = digamma(mf + 1.0)?;
    let mut psi_a = digamma(a)?;
    let mut psi_b = digamma(b)?;
    let mut coef = 1.0 / factorial(m);
    let mut sum = 0.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let t = coef * (lw - psi_n1 - psi_nm1 + psi_a + psi_b);
        sum += t;
        if n > 2 && t.abs() <= 1e-17 * sum.abs() {
            break;
        }
        coef *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + mf + 1.0)) * w;
        psi_n1 += 1.0 / (nf + 1.0);
        psi_nm1 += 1.0 / (nf + mf + 1.0);
        psi_a += 1.0 / (a + nf);
        psi_b += 1.0 / (b + nf);
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(finite - sign * gamma(c)? * rgamma(a - mf) * rgamma(b - mf) * sum)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
