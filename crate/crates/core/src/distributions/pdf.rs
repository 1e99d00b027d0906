use std::f64::consts::PI;

use super::{closed_kind, Closed};
use crate::billiards::{BilliardSpec, Shape};
use crate::error::{Error, Result};
use crate::specialfn::{elliptic_k_complement, gamma, hyp2f1, meijer_g_4044};

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Closed-form amplitude density. Returns 0 outside the support and a
/// `SingularPoint` error where the density diverges.
pub fn pdf_closed(spec: &BilliardSpec, psi: f64) -> Result<f64> {
    let closed = closed_kind(spec)?.ok_or_else(|| Error::NoClosedForm(format!("{spec} has no closed-form density")))?;
    if !psi.is_finite() {
        return Err(Error::InvalidArgument(format!("amplitude {psi} is not finite")));
    }
    let s = sign(psi);
    let a = psi.abs();
    match closed {
        Closed::Box { m } => {
            if a > 1.0 {
                return Ok(0.0);
            }
            if a == 1.0 {
                return Err(Error::SingularPoint { psi });
            }
            let weight = if m % 2 == 1 { 1.0 + s / m as f64 } else { 1.0 };
            Ok(weight / (PI * (1.0 - a * a).sqrt()))
        }
        Closed::Rectangle { odd_weight } => {
            if a > 1.0 {
                return Ok(0.0);
            }
            if a == 0.0 {
                return Err(Error::SingularPoint { psi });
            }
            // K(1 - Psi^2) through the complementary parameter keeps full
            // relative accuracy as Psi -> 0; at |Psi| = 1 this is the inner limit.
            let k = elliptic_k_complement(a * a)?;
            Ok(2.0 / (PI * PI) * k * (1.0 + s * odd_weight))
        }
        Closed::Isosceles { sign: state_sign } => {
            let z = 27.0 * a * a / 64.0;
            if z >= 1.0 {
                return Ok(0.0);
            }
            if a == 0.0 {
                return Err(Error::SingularPoint { psi });
            }
            let p1 = 3.0 * meijer_g_4044(z)? / (4.0 * 2f64.sqrt() * PI);
            Ok(p1 * (1.0 + s * state_sign))
        }
        Closed::Equilateral { sign: state_sign } => {
            let z = 4.0 * a * a / 27.0;
            if z >= 1.0 {
                return Ok(0.0);
            }
            if a == 0.0 {
                return Err(Error::SingularPoint { psi });
            }
            Ok((1.0 + s * state_sign) * equilateral_bracket(a, z)? / (48.0 * PI.powf(2.5) * a.powf(5.0 / 3.0)))
        }
        Closed::Circle(model) => model.pdf(psi),
    }
}

/// The bracketed hypergeometric combination of the equilateral density.
/// Near the support edge the two leading terms cancel; the difference of
/// the two 2F1 terms is formed before scaling.
fn equilateral_bracket(a: f64, z: f64) -> Result<f64> {
    let f1 = hyp2f1(2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, z)?;
    let f2 = hyp2f1(-1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, z)?;
    let f3 = hyp2f1(1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, z)?;
    let a2 = a * a;
    let diff = 27.0 * (f1 - f2) - 4.0 * a2 * f1;
    let t1 = gamma(2.0 / 3.0)? * gamma(-1.0 / 6.0)? * diff;
    let t2 = 72.0 * gamma(1.0 / 3.0)? * gamma(7.0 / 6.0)? * a.powf(4.0 / 3.0) * f3;
    Ok(t1 + t2)
}

/// Leading small-amplitude behaviour of the closed-form density, including
/// the sign factor of single-signed and odd-odd states so that the ratio to
/// `pdf_closed` tends to 1.
pub fn pdf_asymptotic(spec: &BilliardSpec, psi: f64) -> Result<f64> {
    let closed = closed_kind(spec)?;
    if psi == 0.0 {
        return Err(Error::SingularPoint { psi });
    }
    let s = sign(psi);
    let a = psi.abs();
    match (spec.shape, closed) {
        (Shape::Rectangle, Some(Closed::Rectangle { odd_weight })) => {
            Ok((16.0 / (a * a)).ln() / (PI * PI) * (1.0 + s * odd_weight))
        }
        (Shape::IsoscelesRight, Some(Closed::Isosceles { sign: st })) => {
            let denom = gamma(1.0 / 12.0)? * gamma(5.0 / 12.0)? * gamma(0.75)?.powi(4) * a.sqrt();
            let lead = 3f64.powf(0.25) * PI.powf(1.5) / denom;
            Ok((lead - ((a / 16.0).ln() + 1.0) / (2.0 * PI * PI)) * (1.0 + s * st))
        }
        (Shape::Equilateral, Some(Closed::Equilateral { sign: st })) => {
            let c = -gamma(-2.0 / 3.0)? * gamma(7.0 / 6.0)? / PI.powf(2.5);
            Ok(c / a.cbrt() * (1.0 + s * st))
        }
        (Shape::Circle, Some(Closed::Circle(model))) => {
            Ok(model.leading_coefficient()? * a.powf(2.0 / model.m as f64 - 1.0))
        }
        _ => Err(Error::UnsupportedShape(format!("no small-amplitude law is known for {spec}"))),
    }
}

/// Gaussian random-wave density for amplitudes normalized over a domain
/// of the given area: variance 1/area.
pub fn gaussian_rwm_pdf(area: f64, psi: f64) -> Result<f64> {
    if !(area > 0.0) {
        return Err(Error::InvalidArgument(format!("area must be positive (got {area})")));
    }
    let sigma = 1.0 / area.sqrt();
    Ok((-0.5 * (psi / sigma).powi(2)).exp() / ((2.0 * PI).sqrt() * sigma))
}
