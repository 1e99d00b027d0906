use num_complex::Complex64;

use super::cf::{cf_numeric, closed_value};
use super::{closed_kind, DistributionForm, Family};
use crate::billiards::BilliardSpec;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_1d_with, FourierInverter, InversionOptions, Options1d, QuadratureResult};

/// Half-width of the window around singular points and support edges
/// where Fourier inversion is not attempted.
pub const EXCLUSION_WINDOW: f64 = 0.02;
const SIGMA_MIN: f64 = 0.002;
const SIGMA_MAX: f64 = 0.05;
const INVERSION_TOL: f64 = 1e-4;
/// Error estimate up to which an inversion that missed `INVERSION_TOL` is
/// still reported, the accuracy the oracle is used at.
pub const FT_ACCEPT_ERROR: f64 = 1e-3;
/// Tolerance of the quadrature fallback when a state has no closed form.
const NUMERIC_CF_TOL: f64 = 1e-9;

/// Fourier inversion of a state's characteristic function, with the
/// samples shared between evaluation points.
///
/// The closed-form characteristic function is used when there is one,
/// quadrature otherwise. Amplitudes are rescaled to unit support width
/// before inverting. For the equilateral ground state only the even part
/// of the characteristic function is known; its inverse is the symmetrized
/// density, which is folded back onto the side where the state lives.
#[derive(Clone, Debug)]
pub struct FtOracle {
    form: DistributionForm,
    inverter: FourierInverter,
    scale: f64,
    fold: bool,
    sigma_floor: f64,
}

impl FtOracle {
    /// `sigma_floor` is the narrowest initial smoothing width (in units of
    /// the rescaled amplitude) that later evaluations may request.
    pub fn new(spec: &BilliardSpec, sigma_floor: f64) -> Result<Self> {
        let form = DistributionForm::new(spec)?;
        let fold = form.family == Family::EquilateralHyp;
        let (lo, hi) = if fold { form.support } else { form.density_range() };
        let scale = if form.family == Family::CircleAsymptotic { lo.abs().max(hi.abs()) } else { 1.0 };
        let closed = closed_kind(spec)?;
        let cf = |eta: f64| -> Result<Complex64> {
            let xi = eta / scale;
            match &closed {
                Some(c) => closed_value(c, xi),
                None => Ok(cf_numeric(spec, xi, NUMERIC_CF_TOL)?.value),
            }
        };
        let sigma_floor = sigma_floor.clamp(SIGMA_MIN, SIGMA_MAX);
        let opts = InversionOptions::new((lo / scale, hi / scale)).sigma(sigma_floor).levels(3).tol(INVERSION_TOL);
        let inverter = FourierInverter::new(cf, form.area(), opts)?;
        Ok(FtOracle { form, inverter, scale, fold, sigma_floor })
    }

    /// Oracle able to evaluate every non-excluded point of `psis`.
    pub fn for_points(spec: &BilliardSpec, psis: &[f64]) -> Result<Self> {
        let form = DistributionForm::new(spec)?;
        let scale = if form.family == Family::CircleAsymptotic { form.support.1 } else { 1.0 };
        let floor = psis
            .iter()
            .map(|&p| distance_to_singular(&form, p) / scale)
            .filter(|&d| d >= EXCLUSION_WINDOW)
            .map(|d| d / 5.0)
            .fold(SIGMA_MAX, f64::min);
        Self::new(spec, floor)
    }

    pub fn form(&self) -> &DistributionForm {
        &self.form
    }

    pub fn sample_count(&self) -> usize {
        self.inverter.sample_count()
    }

    /// Density at psi. Points within the exclusion window of a singular
    /// point give `ExcludedPoint`.
    pub fn density(&self, psi: f64) -> Result<QuadratureResult> {
        let d = distance_to_singular(&self.form, psi) / self.scale;
        if d < EXCLUSION_WINDOW {
            return Err(Error::ExcludedPoint { psi, window: EXCLUSION_WINDOW * self.scale });
        }
        let sigma0 = (d / 5.0).clamp(self.sigma_floor, SIGMA_MAX);
        let u = if self.fold { psi.abs() } else { psi } / self.scale;
        let mut r = self.inverter.density_with_sigma(u, sigma0);
        if self.fold {
            let weight = 1.0 + psi.signum() * self.form.asymmetry_coefficient;
            r.value *= weight;
            r.error_estimate *= weight;
        }
        r.value /= self.scale;
        r.error_estimate /= self.scale;
        Ok(r)
    }

    /// Density value at psi, accepted when the inversion converged or its
    /// error estimate is within `FT_ACCEPT_ERROR`.
    pub fn density_value(&self, psi: f64) -> Result<f64> {
        let r = self.density(psi)?;
        if r.converged || r.error_estimate <= FT_ACCEPT_ERROR {
            Ok(r.value)
        } else {
            r.require("Fourier inversion").map(|r| r.value)
        }
    }

    /// Probability of [a, b] from the inverted distribution function. Both
    /// ends must lie outside the exclusion windows, and for the folded
    /// equilateral density the interval must not contain the origin.
    pub fn mass(&self, a: f64, b: f64) -> Result<f64> {
        if !(b > a) {
            return Err(Error::InvalidArgument(format!("empty interval [{a}, {b}]")));
        }
        if self.fold && a < 0.0 && b > 0.0 {
            return Err(Error::InvalidArgument("folded density mass cannot straddle the origin".into()));
        }
        let mut ends = [0.0; 2];
        for (slot, psi) in ends.iter_mut().zip([a, b]) {
            let d = distance_to_singular(&self.form, psi) / self.scale;
            if d < EXCLUSION_WINDOW {
                return Err(Error::ExcludedPoint { psi, window: EXCLUSION_WINDOW * self.scale });
            }
            let sigma0 = (d / 5.0).clamp(self.sigma_floor, SIGMA_MAX);
            *slot = self.inverter.cdf_with_sigma(psi / self.scale, sigma0).value;
        }
        let weight = if self.fold { 1.0 + (a + b).signum() * self.form.asymmetry_coefficient } else { 1.0 };
        Ok(weight * (ends[1] - ends[0]))
    }

    /// Total probability of the inverted density: quadrature of the pointwise
    /// inverse away from the singular points plus the mass of the windows
    /// around them from the inverted distribution function.
    pub fn total_mass(&self) -> Result<f64> {
        let (lo, hi) = if self.fold { self.form.support } else { self.form.density_range() };
        let (lo, hi) = (lo / self.scale, hi / self.scale);
        let w = 5.0 * self.sigma_floor;
        let mut cuts: Vec<f64> = self.form.singular_points().iter().map(|p| p / self.scale).collect();
        cuts.retain(|&p| p >= lo - w && p <= hi + w);
        let mut mass = 0.0;
        let weight = |u: f64| if self.fold { 1.0 + u.signum() * self.form.asymmetry_coefficient } else { 1.0 };
        for &p in &cuts {
            let c = |x: f64| self.inverter.cdf_with_sigma(x, self.sigma_floor).value;
            if self.fold && p == 0.0 {
                mass += c(w) - c(-w);
            } else {
                mass += weight(p) * (c(p + w) - c(p - w));
            }
        }
        // segments between consecutive windows
        let mut edges = vec![lo - w];
        edges.extend(cuts.iter().copied());
        edges.push(hi + w);
        edges.sort_by(f64::total_cmp);
        let opts = Options1d { abs_tol: 1e-8, rel_tol: 1e-8, ..Default::default() };
        for pair in edges.windows(2) {
            let (a, b) = (pair[0] + w, pair[1] - w);
            if b <= a {
                continue;
            }
            let f = |u: f64| {
                let sigma0 = (dist(u, &cuts) / 5.0).clamp(self.sigma_floor, SIGMA_MAX);
                let v = self.inverter.density_with_sigma(if self.fold { u.abs() } else { u }, sigma0).value;
                v * weight(u)
            };
            mass += integrate_1d_with(f, a, b, &opts)?.value;
        }
        Ok(mass)
    }
}

fn dist(u: f64, pts: &[f64]) -> f64 {
    pts.iter().map(|p| (u - p).abs()).fold(f64::INFINITY, f64::min)
}

fn distance_to_singular(form: &DistributionForm, psi: f64) -> f64 {
    dist(psi, &form.singular_points())
}

/// Density at psi by Fourier inversion of the characteristic function.
pub fn pdf_via_ft(spec: &BilliardSpec, psi: f64) -> Result<f64> {
    FtOracle::for_points(spec, &[psi])?.density_value(psi)
}
