use std::f64::consts::PI;

use super::geometry::Point;
use super::{BilliardSpec, Mode, Shape};
use crate::error::{Error, Result};
use crate::specialfn::{bessel_j_zero, j_nonneg};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// A validated spec together with the data its eigenfunction needs
/// (the Bessel zero for the disk).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenstate {
    pub spec: BilliardSpec,
    zero: f64,
}

impl Eigenstate {
    pub fn new(spec: BilliardSpec) -> Result<Self> {
        spec.validate()?;
        let zero = if spec.shape == Shape::Circle { bessel_j_zero(spec.m, spec.n)? } else { 0.0 };
        Ok(Eigenstate { spec, zero })
    }

    /// z_{m,n} for the disk, 0 otherwise.
    pub fn bessel_zero(&self) -> f64 {
        self.zero
    }

    /// Amplitude at p, which must lie in the domain.
    pub fn value(&self, p: Point) -> Result<f64> {
        if !self.spec.domain().contains(p) {
            return Err(Error::OutsideDomain { x: p.x, y: p.y });
        }
        Ok(self.amplitude(p.x, p.y))
    }

    /// Amplitude without the containment check. The formula extends
    /// analytically beyond the domain, which finite-difference stencils rely on.
    pub fn amplitude(&self, x: f64, y: f64) -> f64 {
        let BilliardSpec { shape, m, n, mode } = self.spec;
        let (mf, nf) = (m as f64, n as f64);
        match shape {
            Shape::Box1D => (mf * x).sin(),
            Shape::Rectangle => (mf * x).sin() * (nf * y).sin(),
            Shape::IsoscelesRight => (mf * x).sin() * (nf * y).sin() - (nf * x).sin() * (mf * y).sin(),
            Shape::Equilateral => equilateral(m, n, mode, x, y),
            Shape::Hemiequilateral => equilateral(m, n, mode, x, y) - equilateral(m, n, mode, PI - x, y),
            Shape::Circle => {
                let r = x.hypot(y);
                let c = (mf * y.atan2(x)).cos();
                j_nonneg(mf, self.zero * r / PI) * c
            }
        }
    }

    /// Eigenvalue of -Laplacian at canonical size.
    pub fn laplacian_eigenvalue(&self) -> f64 {
        let (m, n) = (self.spec.m as f64, self.spec.n as f64);
        match self.spec.shape {
            Shape::Box1D => m * m,
            Shape::Rectangle | Shape::IsoscelesRight => m * m + n * n,
            Shape::Equilateral | Shape::Hemiequilateral => 16.0 / 9.0 * (m * m - m * n + n * n),
            Shape::Circle => (self.zero / PI).powi(2),
        }
    }

    /// Energy label as usually quoted: m^2 + n^2 for the square and the
    /// isosceles triangle, m^2 + n^2 - mn for the equilateral family, z^2 for
    /// the disk. Proportional to the Laplacian eigenvalue within a shape.
    pub fn energy(&self) -> f64 {
        let (m, n) = (self.spec.m as f64, self.spec.n as f64);
        match self.spec.shape {
            Shape::Box1D => m * m,
            Shape::Rectangle | Shape::IsoscelesRight => m * m + n * n,
            Shape::Equilateral | Shape::Hemiequilateral => m * m + n * n - m * n,
            Shape::Circle => self.zero * self.zero,
        }
    }
}

pub fn eigenfunction(spec: &BilliardSpec, p: Point) -> Result<f64> {
    Eigenstate::new(*spec)?.value(p)
}

pub fn energy(spec: &BilliardSpec) -> Result<f64> {
    Ok(Eigenstate::new(*spec)?.energy())
}

fn equilateral(m: u32, n: u32, mode: Mode, x: f64, y: f64) -> f64 {
    let f = |t: f64| if mode == Mode::Sin { t.sin() } else { t.cos() };
    let (m, n) = (m as f64, n as f64);
    let ky = 2.0 / SQRT3 * y;
    let kx = 2.0 / 3.0 * x;
    ((m - n) * ky).sin() * f(-(m + n) * kx) + (n * ky).sin() * f((2.0 * m - n) * kx)
        - (m * ky).sin() * f((2.0 * n - m) * kx)
}

/// Probes a handful of interior points to reject labels whose
/// eigenfunction is identically zero.
pub(super) fn is_nonzero(spec: &BilliardSpec) -> bool {
    const PROBES: [(f64, f64); 5] = [(0.31, 0.17), (0.47, 0.29), (0.23, 0.08), (0.41, 0.52), (0.12, 0.1)];
    let (m, n, mode) = (spec.m, spec.n, spec.mode);
    PROBES.iter().any(|&(a, b)| {
        // scaled into the hemiequilateral half, which lies inside both triangles
        let (x, y) = (a * PI, b * PI);
        let v = match spec.shape {
            Shape::Hemiequilateral => equilateral(m, n, mode, x, y) - equilateral(m, n, mode, PI - x, y),
            _ => equilateral(m, n, mode, x, y),
        };
        v.abs() > 1e-8
    })
}
