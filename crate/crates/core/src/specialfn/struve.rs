//! Struve function H0.

use std::f64::consts::FRAC_2_PI;

use super::bessel::bessel_y0_large;
use crate::error::{Error, Result};
use crate::quadrature::gauss_kronrod::gk_adaptive;

/// Crossover between the power series and the Y0-plus-Laplace-integral form.
pub const STRUVE_CROSSOVER: f64 = 20.0;

/// Struve function H0(x), odd in x.
pub fn struve_h0(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain { function: "struve_h0", detail: format!("argument {x}") });
    }
    let ax = x.abs();
    let v = if ax < STRUVE_CROSSOVER { series(ax) } else { large(ax)? };
    Ok(if x < 0.0 { -v } else { v })
}

/// Power series summed in double-double arithmetic; at |x| = 20 the largest
/// term exceeds the result by about 1e8.
fn series(x: f64) -> f64 {
    let x2 = Dd::prod(x, x);
    let mut term = Dd::from(x);
    let mut sum = term;
    for k in 0..400 {
        let d = (2 * k + 3) as f64;
        term = term.mul(x2).div_f64(d * d).neg();
        sum = sum.add(term);
        if term.hi.abs() < 1e-34 * sum.hi.abs() {
            break;
        }
    }
    FRAC_2_PI * sum.hi + FRAC_2_PI * sum.lo
}

/// H0(x) = Y0(x) + (2/pi) int_0^inf e^{-x t} / sqrt(1 + t^2) dt for x > 0.
fn large(x: f64) -> Result<f64> {
    let f = |u: f64| (-u).exp() / (1.0 + (u / x) * (u / x)).sqrt();
    let r = gk_adaptive(&f, 0.0, 60.0, 1e-16, 5e-14, 200).require("struve_h0 Laplace integral")?;
    Ok(bessel_y0_large(x) + FRAC_2_PI * r.value / x)
}

/// Minimal double-double value for the cancellation-prone series.
#[derive(Clone, Copy, Debug)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl From<f64> for Dd {
    fn from(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }
}

impl Dd {
    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let e = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: e }
    }

    fn prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        Dd { hi: p, lo: a.mul_add(b, -p) }
    }

    fn renorm(hi: f64, lo: f64) -> Dd {
        let s = hi + lo;
        Dd { hi: s, lo: lo - (s - hi) }
    }

    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        Dd::renorm(s.hi, s.lo + self.lo + o.lo)
    }

    fn mul(self, o: Dd) -> Dd {
        let p = Dd::prod(self.hi, o.hi);
        Dd::renorm(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let r = Dd::prod(q1, d);
        let rem = (self.hi - r.hi - r.lo + self.lo) / d;
        Dd::renorm(q1, rem)
    }

    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}
