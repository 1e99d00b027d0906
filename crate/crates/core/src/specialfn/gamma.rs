//! Gamma family. Real-axis values delegate to `statrs`; the complex log-gamma
//! needed by the Mellin-Barnes contour is a Lanczos approximation.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Gamma function on the real line. Non-positive integers are poles.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain { function: "gamma", detail: "NaN argument".into() });
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { function: "gamma", at: x });
    }
    if x > 140.0 {
        // statrs overflows internally before the true overflow at ~171.6
        let n = (x - 140.0).ceil();
        let base = statrs::function::gamma::gamma(x - n);
        return Ok((1..=n as i64).fold(base, |acc, j| acc * (x - j as f64)));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// Reciprocal gamma, zero at the poles of gamma.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        0.0
    } else {
        1.0 / statrs::function::gamma::gamma(x)
    }
}

/// `ln |Gamma(x)|`.
pub fn ln_gamma_abs(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { function: "ln_gamma", at: x });
    }
    if x > 0.0 {
        Ok(statrs::function::gamma::ln_gamma(x))
    } else {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let s = (PI * x).sin().abs();
        Ok(PI.ln() - s.ln() - statrs::function::gamma::ln_gamma(1.0 - x))
    }
}

/// Sign of Gamma(x) for non-pole x.
pub fn gamma_sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if (x.floor() as i64).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Digamma function.
pub fn digamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { function: "digamma", at: x });
    }
    Ok(statrs::function::gamma::digamma(x))
}

/// Pochhammer symbol (a)_n for integer n >= 0, by direct product.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (a + k as f64))
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal-branch-free complex log-gamma: the imaginary part is continuous
/// along paths avoiding the poles, which is all the contour integral needs
/// since it only exponentiates the result.
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z)
        ln_pi() - ln_sin_pi(z) - ln_gamma_complex(Complex64::new(1.0, 0.0) - z)
    } else {
        let z = z - 1.0;
        let mut x = Complex64::new(LANCZOS[0], 0.0);
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            x += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
    }
}

fn ln_pi() -> Complex64 {
    Complex64::new(PI.ln(), 0.0)
}

/// `ln sin(pi w)` evaluated without overflow for large |Im w|.
fn ln_sin_pi(w: Complex64) -> Complex64 {
    let i = Complex64::i();
    if w.im >= 0.0 {
        // sin(pi w) = (e^{i pi w} - e^{-i pi w}) / 2i = e^{-i pi w} (e^{2 i pi w} - 1) / 2i
        -i * PI * w + ((2.0 * i * PI * w).exp() - 1.0).ln() - (2.0 * i).ln()
    } else {
        ln_sin_pi(w.conj()).conj()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poles_are_reported() {
        assert!(matches!(gamma(0.0), Err(Error::Pole { .. })));
        assert!(matches!(gamma(-3.0), Err(Error::Pole { .. })));
        assert_eq!(rgamma(-2.0), 0.0);
    }

    #[test]
    fn complex_matches_real_axis() {
        for &x in &[0.3, 1.0, 2.5, 7.25, 30.0, -0.4, -2.7] {
            let c = ln_gamma_complex(Complex64::new(x, 0.0));
            let r = ln_gamma_abs(x).unwrap();
            assert!((c.re - r).abs() < 1e-12 * r.abs().max(1.0), "x={x}");
        }
    }

    #[test]
    fn complex_modulus_on_imaginary_axis() {
        // |Gamma(i y)|^2 = pi / (y sinh(pi y))
        for &y in &[0.5, 2.0, 10.0, 40.0] {
            let c = ln_gamma_complex(Complex64::new(0.0, y));
            let expect = 0.5 * (PI / (y * (PI * y).sinh())).ln();
            assert!((c.re - expect).abs() < 1e-11 * expect.abs().max(1.0), "y={y}");
        }
    }

    #[test]
    fn gamma_sign_alternates() {
        assert_eq!(gamma_sign(-0.5), -1.0);
        assert_eq!(gamma_sign(-1.5), 1.0);
        assert_eq!(gamma_sign(2.5), 1.0);
    }
}
