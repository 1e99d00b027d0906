//! Large-quantum-number model of the disk: the radial Bessel factor is
//! replaced by its leading large-order form J_m(z) ~ (e z / 2m)^m / sqrt(2 pi m),
//! so Psi ~ A rho^m cos(m theta) with rho = r / pi and A the model amplitude
//! at the wall.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::cf::cf_numeric;
use crate::billiards::{BilliardSpec, Shape};
use crate::error::{Error, Result};
use crate::specialfn::{bessel_j_zero, complete_beta, gamma, hyp_pfq, inc_beta, ln_gamma_abs, SeriesPolicy};

/// Relative deviation above which the model is reported as out of regime.
pub const REGIME_TOLERANCE: f64 = 0.05;
/// Below this argument the 1F2 series is summed directly.
const SERIES_LIMIT: f64 = 900.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircleModel {
    pub m: u32,
    pub n: u32,
    /// Bessel zero z_{m,n}.
    pub k: f64,
    ln_amp: f64,
}

impl CircleModel {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m <= 2 || n == 0 {
            return Err(Error::NoClosedForm(format!("the asymptotic disk model needs m > 2 and n >= 1 (got ({m},{n}))")));
        }
        let k = bessel_j_zero(m, n)?;
        let mf = m as f64;
        let ln_amp = -0.5 * (2.0 * PI * mf).ln() + mf * (1.0 + k.ln() - (2.0 * mf).ln());
        Ok(CircleModel { m, n, k, ln_amp })
    }

    /// Model amplitude at the wall, the edge of the model support.
    pub fn amplitude_max(&self) -> f64 {
        self.ln_amp.exp()
    }

    /// X / xi^2 where X is the 1F2 argument magnitude.
    pub fn x_per_xi2(&self) -> f64 {
        (2.0 * self.ln_amp - 4f64.ln()).exp()
    }

    /// pi^3 1F2(1/m; 1, 1 + 1/m; -X), X = 2^{-2m-3} e^{2m} (k/m)^{2m} xi^2 / (m pi).
    pub fn cf(&self, xi: f64) -> Result<f64> {
        if xi == 0.0 {
            return Ok(PI.powi(3));
        }
        let mf = self.m as f64;
        let ln_x = (-2.0 * mf - 3.0) * 2f64.ln() + 2.0 * mf + 2.0 * mf * (self.k / mf).ln() + 2.0 * xi.abs().ln()
            - (mf * PI).ln();
        Ok(PI.powi(3) * hyp1f2_disk(1.0 / mf, ln_x)?)
    }

    /// The density written as in the closed-form expression: a power-law
    /// term minus an incomplete-beta correction, both with the
    /// (e k)^{2m} > pi (2m)^{2m+1} Psi^2 support predicate. Evaluated in logs
    /// since k^{2m} overflows for moderate m.
    pub fn pdf(&self, psi: f64) -> Result<f64> {
        if psi == 0.0 {
            return Err(Error::SingularPoint { psi });
        }
        let mf = self.m as f64;
        let lk = self.k.ln();
        let lpsi = psi.abs().ln();
        let ln2 = 2f64.ln();
        // (e k)^{2m} > pi (2m)^{2m+1} Psi^2
        if 2.0 * mf * (1.0 + lk) <= PI.ln() + (2.0 * mf + 1.0) * (2.0 * mf).ln() + 2.0 * lpsi {
            return Ok(0.0);
        }
        let ln_pref = (1.0 / mf + 2.0) * ln2 + (1.0 / mf + 1.0) * mf.ln() + PI.ln() / mf - 2.0;
        let ln_t1 = 0.5 * PI.ln() - (PI / mf).cos().ln() + (2.0 / mf - 1.0) * lpsi - 2.0 * lk
            - ln_gamma_abs(0.5 + 1.0 / mf)?
            - ln_gamma_abs((mf - 1.0) / mf)?;
        let ln_w = (2.0 * mf + 1.0) * ln2 - 2.0 * mf + (2.0 * mf + 1.0) * mf.ln() + PI.ln() + 2.0 * lpsi - 2.0 * mf * lk;
        let w = ln_w.exp().min(1.0);
        let bw = inc_beta(w, 0.5 - 1.0 / mf, 0.5)?;
        let ln_t2 = (1.0 / mf - 0.5) * (2.0 * lpsi - 2.0 * mf * lk) + bw.ln() - PI.ln() - mf * lk;
        Ok(ln_pref.exp() * (ln_t1.exp() - ln_t2.exp()).max(0.0))
    }

    /// Coefficient c of the small-amplitude law P ~ c |Psi|^{2/m - 1}.
    pub fn leading_coefficient(&self) -> Result<f64> {
        let mf = self.m as f64;
        let c = 1.0 / (mf * PI) * (-2.0 / mf * self.ln_amp).exp();
        Ok(c * complete_beta(0.5 - 1.0 / mf, 0.5)?)
    }
}

/// 1F2(a; 1, 1 + a; -X) for X = exp(ln_x). This is the mean of
/// J0(T s) with T = 2 sqrt X and s distributed as 2a s^{2a-1} on [0, 1], so
/// for large T it splits into the Mellin transform of J0 minus the tail
/// integral of u^{2a-1} J0(u) beyond T, which has an asymptotic expansion.
pub(crate) fn hyp1f2_disk(a: f64, ln_x: f64) -> Result<f64> {
    let x = ln_x.exp();
    if x <= SERIES_LIMIT {
        return hyp_pfq(&[a], &[1.0, 1.0 + a], -x, &SeriesPolicy::default());
    }
    let t = 2.0 * x.sqrt();
    let mellin = gamma(1.0 + a)? / gamma(1.0 - a)? * (-a * ln_x).exp();
    let tail = bessel_power_tail(2.0 * a - 1.0, t);
    Ok(mellin - 2.0 * a * (-2.0 * a * t.ln()).exp() * tail)
}

/// int_T^inf u^mu J0(u) du for large T, from the Hankel expansion of J0
/// and repeated integration by parts of u^beta e^{iu}.
fn bessel_power_tail(mu: f64, t: f64) -> f64 {
    let phase = Complex64::from_polar((2.0 / PI).sqrt(), -FRAC_PI_4);
    let i = Complex64::i();
    let mut total = Complex64::new(0.0, 0.0);
    // a_k(0) t^{-k}, the Hankel coefficients of order zero
    let mut coeff = 1.0;
    let mut last = f64::INFINITY;
    for k in 0..60 {
        if k > 0 {
            let kf = k as f64;
            coeff *= -(2.0 * kf - 1.0).powi(2) / (8.0 * kf);
        }
        let size = coeff.abs() * t.powi(-k);
        if size > last || size < 1e-18 {
            break;
        }
        last = size;
        let beta = mu - 0.5 - k as f64;
        total += phase * i.powi(k) * coeff * power_exp_tail(beta, t);
    }
    total.re
}

/// int_T^inf u^beta e^{iu} du = i e^{iT} T^beta sum_j i^j beta(beta-1)...(beta-j+1) T^{-j}.
fn power_exp_tail(beta: f64, t: f64) -> Complex64 {
    let i = Complex64::i();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for j in 0..200 {
        let size = term.norm();
        if size > last || size < 1e-18 {
            break;
        }
        sum += term;
        last = size;
        term *= i * (beta - j as f64) / t;
    }
    i * Complex64::from_polar(t.powf(beta), t) * sum
}

/// Deviation of the model characteristic function from direct quadrature.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    /// Largest |model - quadrature| / |quadrature| where |quadrature| >= 1% of phi(0).
    pub max_relative_deviation: f64,
    pub xi_at_max: f64,
    pub points_checked: usize,
    pub within_regime: bool,
}

/// Compares the model against quadrature of the exact eigenfunction on
/// xi = 0, 0.5, ..., xi_max.
pub fn circle_regime(spec: &BilliardSpec, xi_max: f64) -> Result<RegimeReport> {
    if spec.shape != Shape::Circle {
        return Err(Error::UnsupportedShape(format!("regime check applies to the disk, not {}", spec.shape)));
    }
    let model = CircleModel::new(spec.m, spec.n)?;
    let phi0 = PI.powi(3);
    let mut report = RegimeReport { max_relative_deviation: 0.0, xi_at_max: 0.0, points_checked: 0, within_regime: true };
    let steps = (xi_max / 0.5).floor() as usize;
    for j in 0..=steps {
        let xi = 0.5 * j as f64;
        let exact = cf_numeric(spec, xi, 1e-9)?.value;
        if exact.norm() < 0.01 * phi0 {
            continue;
        }
        let dev = (Complex64::new(model.cf(xi)?, 0.0) - exact).norm() / exact.norm();
        report.points_checked += 1;
        if dev > report.max_relative_deviation {
            report.max_relative_deviation = dev;
            report.xi_at_max = xi;
        }
    }
    report.within_regime = report.max_relative_deviation <= REGIME_TOLERANCE;
    Ok(report)
}
