//! Generalized hypergeometric series pFq for p <= q on the real line.
//!
//! The series is first scanned in log space to locate its largest term. When
//! the cancellation between terms would cost more than the requested
//! tolerance in double precision, the sum is recomputed in fixed-point big
//! integer arithmetic at a precision chosen from that scan, with a running
//! rounding-error bound that triggers a retry at higher precision if needed.

use dashu_int::ops::BitTest;
use dashu_int::IBig;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Controls truncation and precision of series evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
    /// Minimum working precision; raised automatically under cancellation.
    pub working_precision_bits: u32,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy { rel_tol: 1e-12, abs_tol: 1e-300, max_terms: 10_000, working_precision_bits: 53 }
    }
}

impl SeriesPolicy {
    pub fn with_max_terms(mut self, n: usize) -> Self {
        self.max_terms = n;
        self
    }
}

/// Upper bound on the raised working precision.
pub const MAX_PRECISION_BITS: u32 = 1 << 18;

/// Outcome of a series evaluation with its bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: usize,
    pub precision_bits: u32,
    /// Bound on the relative error from rounding and truncation.
    pub rel_error_bound: f64,
}

/// pFq(a; b; z) for p <= q and real z.
pub fn hyp_pfq(a: &[f64], b: &[f64], z: f64, policy: &SeriesPolicy) -> Result<f64> {
    hyp_pfq_eval(a, b, z, policy).map(|v| v.value)
}

/// 0F1(; b; z).
pub fn hyp0f1(b: f64, z: f64) -> Result<f64> {
    hyp_pfq(&[], &[b], z, &SeriesPolicy::default())
}

/// As [`hyp_pfq`], returning the term count, precision and error bound.
pub fn hyp_pfq_eval(a: &[f64], b: &[f64], z: f64, policy: &SeriesPolicy) -> Result<SeriesValue> {
    if a.len() > b.len() {
        return Err(Error::Domain {
            function: "hyp_pfq",
            detail: format!("p = {} exceeds q = {}", a.len(), b.len()),
        });
    }
    if !z.is_finite() || a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::Domain { function: "hyp_pfq", detail: "non-finite input".into() });
    }
    if let Some(&bad) = b.iter().find(|&&bj| bj <= 0.0 && bj.fract() == 0.0) {
        return Err(Error::Pole { function: "hyp_pfq", at: bad });
    }
    if z == 0.0 {
        return Ok(SeriesValue { value: 1.0, terms: 1, precision_bits: 53, rel_error_bound: 0.0 });
    }

    let scan = scan(a, b, z, policy)?;
    if let Some(v) = scan.f64_value {
        return Ok(v);
    }
    let eps_bits = (-policy.rel_tol.log2()).ceil() as u32;
    let log2_terms = (scan.terms as f64).log2().ceil() as u32;
    let mut bits = (scan.log2_max_term.ceil().max(0.0) as u32)
        .saturating_add(eps_bits + 2 * log2_terms + 48)
        .max(policy.working_precision_bits);
    loop {
        if bits > MAX_PRECISION_BITS {
            return Err(Error::Cancellation {
                what: "hyp_pfq",
                detail: format!("needs more than {MAX_PRECISION_BITS} bits (largest term 2^{:.0})", scan.log2_max_term),
            });
        }
        let r = fixed_point_sum(a, b, z, bits, scan.log2_max_term, policy)?;
        if r.rel_error_bound <= policy.rel_tol / 16.0 || r.value.abs() <= policy.abs_tol {
            return Ok(r);
        }
        let deficit = (r.rel_error_bound * 16.0 / policy.rel_tol).log2().ceil();
        bits = if deficit.is_finite() && deficit < 1e6 {
            bits.saturating_add(deficit.max(1.0) as u32 + 32)
        } else {
            bits.saturating_mul(2)
        };
    }
}

struct Scan {
    log2_max_term: f64,
    terms: usize,
    f64_value: Option<SeriesValue>,
}

fn ratio(a: &[f64], b: &[f64], z: f64, k: usize) -> f64 {
    let kf = k as f64;
    let mut r = z / (kf + 1.0);
    for &ai in a {
        r *= ai + kf;
    }
    for &bj in b {
        r /= bj + kf;
    }
    r
}

/// Locates the peak term in log space and, when the terms stay in range,
/// sums in double precision alongside with a rounding-error estimate.
fn scan(a: &[f64], b: &[f64], z: f64, policy: &SeriesPolicy) -> Result<Scan> {
    let growth = (a.len() + b.len() + 3) as f64;
    let mut ln_t = 0.0f64;
    let mut ln_max = 0.0f64;
    let mut t = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_weighted = 1.0f64;
    let mut in_range = true;
    let tol = policy.rel_tol * 1e-3;
    for k in 0..policy.max_terms {
        let r = ratio(a, b, z, k);
        if r == 0.0 {
            return Ok(finish(ln_max, k + 1, in_range, sum, abs_weighted, policy));
        }
        ln_t += r.abs().ln();
        ln_max = ln_max.max(ln_t);
        if in_range {
            if ln_max > 690.0 {
                in_range = false;
            } else {
                t *= r;
                sum += t;
                abs_weighted += t.abs() * (1.0 + growth * (k + 1) as f64);
            }
        }
        if r.abs() < 0.5 {
            let done = if in_range {
                t.abs() <= tol * sum.abs() || t.abs() <= policy.abs_tol
            } else {
                ln_t < ln_max - 60.0 * std::f64::consts::LN_10
            };
            if done {
                return Ok(finish(ln_max, k + 2, in_range, sum, abs_weighted, policy));
            }
        }
    }
    Err(Error::NonConvergence {
        what: "hyp_pfq series",
        iterations: policy.max_terms,
        estimate: if in_range { sum } else { f64::NAN },
        error: f64::NAN,
    })
}

fn finish(ln_max: f64, terms: usize, in_range: bool, sum: f64, abs_weighted: f64, policy: &SeriesPolicy) -> Scan {
    let log2_max_term = ln_max / std::f64::consts::LN_2;
    let f64_value = if in_range && sum != 0.0 {
        let bound = f64::EPSILON * abs_weighted / sum.abs();
        (bound <= policy.rel_tol / 16.0).then_some(SeriesValue {
            value: sum,
            terms,
            precision_bits: 53,
            rel_error_bound: bound,
        })
    } else {
        None
    };
    Scan { log2_max_term, terms, f64_value }
}

/// A real number p / q; parameters close to a small-denominator rational are
/// snapped to it so the recurrence multiplies by machine-size integers.
#[derive(Clone, Copy, Debug)]
struct Rational {
    p: i128,
    q: i128,
}

fn to_rational(x: f64) -> Rational {
    if x.fract() == 0.0 && x.abs() < 1e18 {
        return Rational { p: x as i128, q: 1 };
    }
    // continued fraction search for small denominators
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > 1 << 20 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= 2.0 * f64::EPSILON * x.abs() {
            return Rational { p: h1, q: k1 };
        }
        let frac = r - a;
        if frac == 0.0 {
            break;
        }
        r = 1.0 / frac;
    }
    dyadic(x)
}

fn dyadic(x: f64) -> Rational {
    let (m, e) = decompose(x);
    if e >= 0 {
        Rational { p: (m as i128) << e, q: 1 }
    } else {
        // parameters reaching here are moderate, so the shift stays small
        let s = (-e).min(100);
        Rational { p: m as i128, q: 1i128 << s }
    }
}

/// x = m * 2^e with integer m.
fn decompose(x: f64) -> (i64, i32) {
    if x == 0.0 {
        return (0, 0);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let mant = if exp == 0 { (bits & 0xf_ffff_ffff_ffff) << 1 } else { (bits & 0xf_ffff_ffff_ffff) | 0x10_0000_0000_0000 };
    let mut m = mant as i64;
    let mut e = exp - 1075;
    while m & 1 == 0 {
        m >>= 1;
        e += 1;
    }
    (sign * m, e)
}

fn fixed_point_sum(
    a: &[f64],
    b: &[f64],
    z: f64,
    bits: u32,
    log2_max_term: f64,
    policy: &SeriesPolicy,
) -> Result<SeriesValue> {
    let ra: Vec<Rational> = a.iter().map(|&v| to_rational(v)).collect();
    let rb: Vec<Rational> = b.iter().map(|&v| to_rational(v)).collect();
    let (zm, ze) = decompose(z);
    let q_a: i128 = ra.iter().map(|r| r.q).product();
    let q_b: i128 = rb.iter().map(|r| r.q).product();
    let zm = IBig::from(zm);
    let q_a_big = IBig::from(q_a);
    let q_b_big = IBig::from(q_b);

    let prec = bits as usize;
    let mut t = IBig::ONE << prec;
    let mut sum = t.clone();
    // Error bookkeeping in units of 2^-prec: `rel_t` bounds the relative
    // rounding error of the current term, `err` accumulates rel_t |t| with
    // |t| measured against 2^reference, the size of the largest term.
    let reference = prec as i64 + log2_max_term.ceil().max(0.0) as i64 + 1;
    let mut rel_t = 0.0f64;
    let mut err = 0.0f64;
    let tol_bits = (-(policy.rel_tol).log2()).ceil() as usize + 24;
    let scaled = |t: &IBig| pow2(t.bit_len() as i64 - reference);

    for k in 0..policy.max_terms {
        let mut num = zm.clone() * &q_b_big;
        for r in &ra {
            num *= IBig::from(r.p + k as i128 * r.q);
        }
        if num.is_zero() {
            return Ok(fixed_to_value(&sum, prec, err, reference, k + 1));
        }
        let mut den = IBig::from(k as i128 + 1) * &q_a_big;
        for r in &rb {
            den *= IBig::from(r.p + k as i128 * r.q);
        }
        t *= num;
        if ze >= 0 {
            t <<= ze as usize;
        } else {
            t >>= (-ze) as usize;
        }
        t = t / &den;
        // two truncations of at most one unit each
        rel_t = (rel_t + pow2(prec as i64 + 2 - t.bit_len() as i64)).min(1e300);
        sum += &t;
        err += rel_t * scaled(&t);
        let rf = ratio(a, b, z, k).abs();
        if rf < 0.5 && t.bit_len() + tol_bits < sum.bit_len() {
            // the geometric tail beyond this term is below |t|
            err += pow2(prec as i64 + t.bit_len() as i64 - reference);
            return Ok(fixed_to_value(&sum, prec, err, reference, k + 2));
        }
    }
    Err(Error::NonConvergence {
        what: "hyp_pfq multiprecision series",
        iterations: policy.max_terms,
        estimate: fixed_to_value(&sum, prec, err, reference, policy.max_terms).value,
        error: f64::NAN,
    })
}

fn pow2(e: i64) -> f64 {
    if e < -1070 {
        0.0
    } else {
        ldexp(1.0, e)
    }
}

fn fixed_to_value(sum: &IBig, prec: usize, err: f64, reference: i64, terms: usize) -> SeriesValue {
    let n = sum.bit_len();
    let shift = n.saturating_sub(64);
    let top = (sum >> shift).to_f64().value();
    let value = ldexp(top, shift as i64 - prec as i64);
    // |sum| >= 2^(n-1) and |t| < 2^bit_len, so the bound is 2 err 2^(reference - prec - n + 1)
    let rel = if n == 0 { f64::INFINITY } else { ldexp(4.0 * err, reference - prec as i64 - n as i64) };
    SeriesValue { value, terms, precision_bits: prec as u32, rel_error_bound: rel }
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}
