//! Recovery of a probability density from its characteristic function.
//!
//! The density is smoothed by a Gaussian of width sigma, which makes the
//! inversion integral absolutely convergent; the integral is then a
//! trapezoid sum on a step h chosen so that periodic images of the smoothed
//! density do not overlap its support (the sum is exact up to that
//! aliasing). Because smoothing perturbs the density by a power series in
//! sigma^2, evaluations at sigma, sigma/sqrt 2, sigma/2, ... are
//! Richardson-extrapolated to sigma = 0. Points closer than a few sigma to a
//! singularity or jump of the density are not resolved by this scheme.

use num_complex::Complex64;
use std::f64::consts::TAU;

use super::QuadratureResult;
use crate::error::{Error, Result};

/// Parameters of the inversion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InversionOptions {
    /// Interval containing the support of the density.
    pub support: (f64, f64),
    /// Smallest initial smoothing width that will be requested.
    pub sigma: f64,
    /// Number of Richardson levels (1 disables extrapolation).
    pub levels: usize,
    /// Target for the extrapolation error estimate.
    pub tol: f64,
}

impl InversionOptions {
    pub fn new(support: (f64, f64)) -> Self {
        InversionOptions { support, sigma: 0.02, levels: 3, tol: 1e-6 }
    }

    pub fn sigma(mut self, sigma: f64) -> Self {
        self.sigma = sigma;
        self
    }

    pub fn levels(mut self, levels: usize) -> Self {
        self.levels = levels;
        self
    }

    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

/// Widest smoothing the sample grid accommodates without aliasing.
const MAX_SIGMA: f64 = 0.05;
/// Gaussian damping below which samples are dropped: exp(-x^2/2) < 1e-17.
const CUTOFF: f64 = 8.9;

/// Characteristic-function samples on a uniform grid, reusable across points.
#[derive(Clone, Debug)]
pub struct FourierInverter {
    h: f64,
    area: f64,
    start: f64,
    samples: Vec<Complex64>,
    opts: InversionOptions,
}

impl FourierInverter {
    /// Samples `cf` (with phi(0) = area) on the grid required by `opts`.
    pub fn new<F>(cf: F, area: f64, opts: InversionOptions) -> Result<Self>
    where
        F: Fn(f64) -> Result<Complex64>,
    {
        let (lo, hi) = opts.support;
        if !(hi > lo) || !(opts.sigma > 0.0) || opts.levels == 0 || !(area > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "inversion needs lo < hi, sigma > 0, levels >= 1 and area > 0 (got [{lo}, {hi}], {}, {}, {area})",
                opts.sigma, opts.levels
            )));
        }
        let margin = 8.0 * opts.sigma.max(MAX_SIGMA);
        let period = (hi - lo) + 2.0 * margin;
        let h = TAU / period;
        let sigma_min = opts.sigma * 0.5f64.powf(0.5 * (opts.levels - 1) as f64);
        let k_max = (CUTOFF / (sigma_min * h)).ceil() as usize;
        let samples = (0..=k_max).map(|k| cf(k as f64 * h)).collect::<Result<Vec<_>>>()?;
        Ok(FourierInverter { h, area, start: lo - margin, samples, opts })
    }

    /// Number of characteristic-function samples taken.
    pub fn sample_count(&self) -> usize {
        self.samples.len()
    }

    /// Density at psi with the configured initial smoothing width.
    pub fn density(&self, psi: f64) -> QuadratureResult {
        self.density_with_sigma(psi, self.opts.sigma)
    }

    /// Density at psi starting the extrapolation from width `sigma0`, which
    /// must not be below the width the grid was built for.
    pub fn density_with_sigma(&self, psi: f64, sigma0: f64) -> QuadratureResult {
        self.extrapolate(sigma0, |s| self.smoothed_density(psi, s))
    }

    /// Probability mass below x (x should be away from singular points).
    pub fn cdf(&self, x: f64) -> QuadratureResult {
        self.cdf_with_sigma(x, self.opts.sigma)
    }

    pub fn cdf_with_sigma(&self, x: f64, sigma0: f64) -> QuadratureResult {
        self.extrapolate(sigma0, |s| self.smoothed_cdf(x, s))
    }

    fn extrapolate<G: Fn(f64) -> (f64, usize)>(&self, sigma0: f64, g: G) -> QuadratureResult {
        let levels = self.opts.levels;
        let mut table: Vec<Vec<f64>> = Vec::with_capacity(levels);
        let mut evaluations = 0;
        for j in 0..levels {
            let sigma = sigma0 * 0.5f64.powf(0.5 * j as f64);
            let (v, n) = g(sigma);
            evaluations += n;
            let mut row = vec![v];
            for k in 1..=j {
                let f = 2f64.powi(k as i32) - 1.0;
                let prev = row[k - 1];
                row.push(prev + (prev - table[j - 1][k - 1]) / f);
            }
            table.push(row);
        }
        let last = &table[levels - 1];
        let value = last[levels - 1];
        let error_estimate = if levels > 1 { (value - last[levels - 2]).abs() } else { f64::NAN };
        let resolved = sigma0 >= self.opts.sigma * (1.0 - 1e-12);
        QuadratureResult {
            value,
            error_estimate,
            converged: resolved && error_estimate <= self.opts.tol,
            evaluations,
        }
    }

    fn smoothed_density(&self, psi: f64, sigma: f64) -> (f64, usize) {
        let h = self.h;
        let mut sum = self.samples[0].re;
        let step = Complex64::from_polar(1.0, -h * psi);
        let mut rot = step;
        let mut used = 1;
        for (k, phi) in self.samples.iter().enumerate().skip(1) {
            let kh = k as f64 * h;
            let damp = (-0.5 * sigma * sigma * kh * kh).exp();
            if damp < 1e-18 {
                break;
            }
            if k % 128 == 0 {
                rot = Complex64::from_polar(1.0, -kh * psi);
            }
            sum += 2.0 * (phi * rot).re * damp;
            rot *= step;
            used += 1;
        }
        (h / (TAU * self.area) * sum, used)
    }

    fn smoothed_cdf(&self, x: f64, sigma: f64) -> (f64, usize) {
        let h = self.h;
        let mut sum = self.samples[0].re * (x - self.start);
        let mut used = 1;
        for (k, phi) in self.samples.iter().enumerate().skip(1) {
            let kh = k as f64 * h;
            let damp = (-0.5 * sigma * sigma * kh * kh).exp();
            if damp < 1e-18 {
                break;
            }
            let e = Complex64::from_polar(1.0, -kh * x) - Complex64::from_polar(1.0, -kh * self.start);
            let term = phi * e / Complex64::new(0.0, -kh);
            sum += 2.0 * term.re * damp;
            used += 1;
        }
        (h / (TAU * self.area) * sum, used)
    }
}

/// Inverts `cf` at a single point; phi(0) must equal `area`.
pub fn fourier_invert<F>(cf: F, psi: f64, area: f64, opts: &InversionOptions) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    Ok(FourierInverter::new(cf, area, *opts)?.density(psi))
}
