//! Complete elliptic integral of the first kind, parameter convention m = k^2.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt for 0 <= m < 1, via the AGM.
pub fn elliptic_k(m: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&m) {
        return Err(Error::Domain { function: "elliptic_k", detail: format!("parameter m = {m} outside [0, 1)") });
    }
    elliptic_k_complement(1.0 - m)
}

/// K expressed through the complementary parameter m1 = 1 - m, which keeps
/// full relative accuracy when m is within rounding of 1.
pub fn elliptic_k_complement(m1: f64) -> Result<f64> {
    if !(m1 > 0.0 && m1 <= 1.0) {
        return Err(Error::Domain {
            function: "elliptic_k",
            detail: format!("complementary parameter {m1} outside (0, 1]"),
        });
    }
    Ok(FRAC_PI_2 / agm(1.0, m1.sqrt()))
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= 2.0 * f64::EPSILON * an {
            return an;
        }
        a = an;
        b = bn;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain() {
        assert!(elliptic_k(1.0).is_err());
        assert!(elliptic_k(-0.1).is_err());
        assert!((elliptic_k(0.0).unwrap() - FRAC_PI_2).abs() < 1e-16);
    }
}
