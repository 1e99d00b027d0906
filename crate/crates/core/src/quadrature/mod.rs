//! Adaptive quadrature in one and two dimensions and Fourier inversion of
//! characteristic functions.

pub mod cubature;
pub mod fourier;
pub mod gauss_kronrod;
pub mod tanh_sinh;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cubature::{integrate_2d, Region};
pub use fourier::{fourier_invert, FourierInverter, InversionOptions};

/// Value of a numerical integral with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub evaluations: usize,
}

impl QuadratureResult {
    /// Converts a non-converged result into an error.
    pub fn require(self, what: &'static str) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NonConvergence {
                what,
                iterations: self.evaluations,
                estimate: self.value,
                error: self.error_estimate,
            })
        }
    }

    pub(crate) fn combine(parts: &[QuadratureResult]) -> QuadratureResult {
        QuadratureResult {
            value: parts.iter().map(|p| p.value).sum(),
            error_estimate: parts.iter().map(|p| p.error_estimate).sum(),
            converged: parts.iter().all(|p| p.converged),
            evaluations: parts.iter().map(|p| p.evaluations).sum(),
        }
    }
}

/// Which rule handles each subinterval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Gauss-Kronrod unless an endpoint evaluates to a non-finite value, with
    /// tanh-sinh as fallback when Gauss-Kronrod does not converge.
    #[default]
    Auto,
    GaussKronrod,
    TanhSinh,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Options1d {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Interior points where the integrand is singular or non-smooth.
    pub breakpoints: Vec<f64>,
    pub method: Method,
    pub max_intervals: usize,
}

impl Default for Options1d {
    fn default() -> Self {
        Options1d { abs_tol: 1e-12, rel_tol: 1e-12, breakpoints: Vec::new(), method: Method::Auto, max_intervals: 2000 }
    }
}

impl Options1d {
    pub fn tol(tol: f64) -> Self {
        Options1d { abs_tol: tol, rel_tol: tol, ..Default::default() }
    }

    pub fn with_breakpoints(mut self, pts: &[f64]) -> Self {
        self.breakpoints = pts.to_vec();
        self
    }
}

/// Integrates f over [a, b] to the tolerance `tol`, applied both absolutely
/// and relative to the result.
pub fn integrate_1d<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    integrate_1d_with(f, a, b, &Options1d::tol(tol))
}

pub fn integrate_1d_with<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &Options1d) -> Result<QuadratureResult> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!("integration bounds [{a}, {b}] must be finite")));
    }
    if !(opts.abs_tol > 0.0 || opts.rel_tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    if a == b {
        return Ok(QuadratureResult { value: 0.0, error_estimate: 0.0, converged: true, evaluations: 0 });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let mut pts = vec![lo];
    let mut inner: Vec<f64> = opts.breakpoints.iter().copied().filter(|&p| p > lo && p < hi).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    pts.extend(inner);
    pts.push(hi);

    let n = (pts.len() - 1) as f64;
    let piece_opts = Options1d { abs_tol: opts.abs_tol / n, ..opts.clone() };
    let parts: Vec<QuadratureResult> =
        pts.windows(2).map(|w| integrate_piece(&f, w[0], w[1], &piece_opts)).collect();
    let mut r = QuadratureResult::combine(&parts);
    r.value *= sign;
    let target = opts.abs_tol.max(opts.rel_tol * r.value.abs());
    r.converged = r.converged && r.error_estimate <= target * 1.0000001;
    Ok(r)
}

fn integrate_piece<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, opts: &Options1d) -> QuadratureResult {
    match opts.method {
        Method::GaussKronrod => gauss_kronrod::gk_adaptive(f, a, b, opts.abs_tol, opts.rel_tol, opts.max_intervals),
        Method::TanhSinh => tanh_sinh::tanh_sinh(f, a, b, opts.abs_tol, opts.rel_tol),
        Method::Auto => {
            let singular_end = !f(a).is_finite() || !f(b).is_finite();
            if singular_end {
                return tanh_sinh::tanh_sinh(f, a, b, opts.abs_tol, opts.rel_tol);
            }
            let gk = gauss_kronrod::gk_adaptive(f, a, b, opts.abs_tol, opts.rel_tol, opts.max_intervals);
            if gk.converged {
                return gk;
            }
            let ts = tanh_sinh::tanh_sinh(f, a, b, opts.abs_tol, opts.rel_tol);
            let evaluations = gk.evaluations + ts.evaluations;
            let best = if ts.error_estimate < gk.error_estimate { ts } else { gk };
            QuadratureResult { evaluations, ..best }
        }
    }
}
