use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{closed_kind, Closed, EvenSeries};
use crate::billiards::{BilliardSpec, Eigenstate, Shape};
use crate::error::{Error, Result};
use crate::quadrature::cubature::integrate_2d_with;
use crate::quadrature::{integrate_1d_with, Options1d, QuadratureResult};
use crate::specialfn::{bessel_j, hyp_pfq, j_nonneg, struve_h0, SeriesPolicy};

/// Closed-form characteristic function. The equilateral ground state
/// returns its even part only, which is all the closed form captures.
pub fn cf_closed(spec: &BilliardSpec, xi: f64) -> Result<Complex64> {
    let closed = closed_kind(spec)?.ok_or_else(|| Error::NoClosedForm(format!("{spec} has no closed-form characteristic function")))?;
    closed_value(&closed, xi)
}

pub(crate) fn closed_value(closed: &Closed, xi: f64) -> Result<Complex64> {
    let ax = xi.abs();
    let policy = SeriesPolicy::default();
    match *closed {
        Closed::Box { m } => {
            let re = PI * bessel_j(0.0, ax)?;
            let im = if m % 2 == 1 { PI / m as f64 * struve_h0(xi)? } else { 0.0 };
            Ok(Complex64::new(re, im))
        }
        Closed::Rectangle { odd_weight } => {
            let j = bessel_j(0.0, 0.5 * ax)?;
            let im = if odd_weight > 0.0 {
                4.0 * odd_weight * xi * hyp_pfq(&[1.0, 1.0], &[1.5, 1.5, 1.5], -0.25 * xi * xi, &policy)?
            } else {
                0.0
            };
            Ok(Complex64::new(PI * PI * j * j, im))
        }
        Closed::Isosceles { sign } => {
            let z = -16.0 / 27.0 * xi * xi;
            let re = 0.5 * PI * PI * hyp_pfq(&[0.25, 0.5, 0.75], &[1.0 / 3.0, 2.0 / 3.0, 1.0, 1.0], z, &policy)?;
            let im = if sign != 0.0 {
                sign * 8.0 / 3.0
                    * xi
                    * hyp_pfq(&[0.75, 1.0, 1.0, 1.25], &[5.0 / 6.0, 7.0 / 6.0, 1.5, 1.5, 1.5], z, &policy)?
            } else {
                0.0
            };
            Ok(Complex64::new(re, im))
        }
        Closed::Equilateral { .. } => {
            let s = EvenSeries::of(closed);
            Ok(Complex64::new(s.prefactor * hyp_pfq(&s.a, &s.b, -s.c * xi * xi, &policy)?, 0.0))
        }
        Closed::Circle(model) => Ok(Complex64::new(model.cf(xi)?, 0.0)),
    }
}

/// Characteristic function by direct quadrature, with the summed error
/// estimates of its real and imaginary parts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CfValue {
    pub value: Complex64,
    pub error_estimate: f64,
}

/// int_D exp(i xi Psi) over the domain. The disk uses the angular integral
/// in closed form (a Bessel J0 of the radial factor, or the plain
/// exponential for m = 0), leaving a radial quadrature.
pub fn cf_numeric(spec: &BilliardSpec, xi: f64, tol: f64) -> Result<CfValue> {
    let st = Eigenstate::new(*spec)?;
    let domain = spec.domain();
    let what = "characteristic function quadrature";
    let (re, im) = match spec.shape {
        Shape::Box1D => {
            let opts = Options1d { abs_tol: tol, rel_tol: tol, ..Default::default() };
            let re = integrate_1d_with(|x| (xi * st.amplitude(x, 0.0)).cos(), 0.0, PI, &opts)?;
            let im = integrate_1d_with(|x| (xi * st.amplitude(x, 0.0)).sin(), 0.0, PI, &opts)?;
            (re, im)
        }
        Shape::Circle => {
            let opts = Options1d { abs_tol: tol, rel_tol: tol, max_intervals: 20000, ..Default::default() };
            let (m, k) = (spec.m as f64, st.bessel_zero());
            let radial = |r: f64| j_nonneg(m, k * r / PI);
            if spec.m == 0 {
                let re = integrate_1d_with(|r| 2.0 * PI * r * (xi * radial(r)).cos(), 0.0, PI, &opts)?;
                let im = integrate_1d_with(|r| 2.0 * PI * r * (xi * radial(r)).sin(), 0.0, PI, &opts)?;
                (re, im)
            } else {
                let re = integrate_1d_with(|r| 2.0 * PI * r * j_nonneg(0.0, (xi * radial(r)).abs()), 0.0, PI, &opts)?;
                // cos(m theta) is symmetric in sign, so the sine part vanishes
                (re, QuadratureResult { value: 0.0, error_estimate: 0.0, converged: true, evaluations: 1 })
            }
        }
        _ => {
            let region = domain.region().expect("two-dimensional shape");
            let re = integrate_2d_with(|x, y| (xi * st.amplitude(x, y)).cos(), &region, tol, tol)?;
            let im = integrate_2d_with(|x, y| (xi * st.amplitude(x, y)).sin(), &region, tol, tol)?;
            (re, im)
        }
    };
    let re = re.require(what)?;
    let im = im.require(what)?;
    Ok(CfValue { value: Complex64::new(re.value, im.value), error_estimate: re.error_estimate + im.error_estimate })
}
