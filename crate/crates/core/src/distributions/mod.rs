//! Characteristic functions and amplitude densities of billiard eigenstates.
//!
//! Amplitudes are unnormalized and points are uniform on the domain, so a
//! characteristic function phi(xi) = int_D exp(i xi Psi) dx equals the domain
//! area at xi = 0 and the density is its Fourier transform divided by the area.

mod cf;
mod circle;
mod ft;
mod moments;
mod pdf;

use serde::{Deserialize, Serialize};

use crate::billiards::{BilliardSpec, Mode, Shape};
use crate::error::Result;

pub use cf::{cf_closed, cf_numeric, CfValue};
pub use circle::{circle_regime, CircleModel, RegimeReport};
pub use ft::{pdf_via_ft, FtOracle, EXCLUSION_WINDOW, FT_ACCEPT_ERROR};
pub use moments::{moment, normalization_constant};
pub use pdf::{gaussian_rwm_pdf, pdf_asymptotic, pdf_closed};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Arcsine1D,
    EllipticK,
    MeijerG,
    EquilateralHyp,
    CircleAsymptotic,
    NumericOnly,
}

/// Which closed form a state has, if any.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Closed {
    Box { m: u32 },
    Rectangle { odd_weight: f64 },
    /// `sign` is +1 for (1,2), -1 for (2,1), 0 for the (1,3) hierarchy.
    Isosceles { sign: f64 },
    Equilateral { sign: f64 },
    Circle(CircleModel),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionForm {
    pub spec: BilliardSpec,
    pub support: (f64, f64),
    pub family: Family,
    /// P(Psi > 0) - P(Psi < 0).
    pub asymmetry_coefficient: f64,
}

impl DistributionForm {
    pub fn new(spec: &BilliardSpec) -> Result<Self> {
        spec.validate()?;
        let closed = closed_kind(spec)?;
        let (family, support, asym) = match closed {
            Some(Closed::Box { m }) => {
                let asym = if m % 2 == 1 { 1.0 / m as f64 } else { 0.0 };
                (Family::Arcsine1D, (if m == 1 { 0.0 } else { -1.0 }, 1.0), asym)
            }
            Some(Closed::Rectangle { odd_weight }) => {
                (Family::EllipticK, (if odd_weight == 1.0 { 0.0 } else { -1.0 }, 1.0), odd_weight)
            }
            Some(Closed::Isosceles { sign }) => {
                let h = (64.0f64 / 27.0).sqrt();
                (Family::MeijerG, (-h, h), sign)
            }
            Some(Closed::Equilateral { sign }) => {
                let h = (27.0f64 / 4.0).sqrt();
                (Family::EquilateralHyp, (-h, h), sign)
            }
            Some(Closed::Circle(model)) => {
                let h = model.amplitude_max();
                (Family::CircleAsymptotic, (-h, h), 0.0)
            }
            None => {
                let h = numeric_bound(spec.shape);
                (Family::NumericOnly, (-h, h), 0.0)
            }
        };
        Ok(DistributionForm { spec: *spec, support, family, asymmetry_coefficient: asym })
    }

    /// Domain length (box) or area.
    pub fn area(&self) -> f64 {
        self.spec.domain().area()
    }

    pub fn has_closed_form(&self) -> bool {
        self.family != Family::NumericOnly
    }

    /// Points where the closed-form density diverges or jumps: the support
    /// edges and the origin (except for the symmetric box states, whose
    /// density is smooth there).
    pub fn singular_points(&self) -> Vec<f64> {
        let (lo, hi) = self.support;
        let mut pts = vec![lo, hi];
        if !(self.spec.shape == Shape::Box1D && self.spec.m % 2 == 0) {
            pts.push(0.0);
        }
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }

    /// Interval outside which the density vanishes. Narrower than the
    /// nominal support for the single-signed triangle ground states.
    pub fn density_range(&self) -> (f64, f64) {
        let (lo, hi) = self.support;
        match self.asymmetry_coefficient {
            a if a == 1.0 => (0.0, hi),
            a if a == -1.0 => (lo, 0.0),
            _ => (lo, hi),
        }
    }
}

pub(crate) fn closed_kind(spec: &BilliardSpec) -> Result<Option<Closed>> {
    let (m, n) = (spec.m, spec.n);
    Ok(match spec.shape {
        Shape::Box1D => Some(Closed::Box { m }),
        Shape::Rectangle => {
            let odd_weight = if m % 2 == 1 && n % 2 == 1 { 1.0 / (m as f64 * n as f64) } else { 0.0 };
            Some(Closed::Rectangle { odd_weight })
        }
        Shape::IsoscelesRight => match (m, n) {
            (1, 2) => Some(Closed::Isosceles { sign: 1.0 }),
            (2, 1) => Some(Closed::Isosceles { sign: -1.0 }),
            (1, 3) | (3, 1) => Some(Closed::Isosceles { sign: 0.0 }),
            _ if (3 * m == n || 3 * n == m) && m.min(n) % 2 == 0 => Some(Closed::Isosceles { sign: 0.0 }),
            _ => None,
        },
        Shape::Equilateral if spec.mode == Mode::Cos => match (m, n) {
            (1, 2) => Some(Closed::Equilateral { sign: 1.0 }),
            (2, 1) => Some(Closed::Equilateral { sign: -1.0 }),
            _ => None,
        },
        Shape::Circle if m > 2 => Some(Closed::Circle(CircleModel::new(m, n)?)),
        _ => None,
    })
}

/// Crude bound on |Psi| from the number of unit-amplitude terms.
fn numeric_bound(shape: Shape) -> f64 {
    match shape {
        Shape::Box1D | Shape::Rectangle | Shape::Circle => 1.0,
        Shape::IsoscelesRight => 2.0,
        Shape::Equilateral => 3.0,
        Shape::Hemiequilateral => 6.0,
    }
}

/// Even part of a closed-form characteristic function written as
/// prefactor * pFq(a; b; -c xi^2).
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct EvenSeries {
    pub prefactor: f64,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: f64,
}

impl EvenSeries {
    pub fn of(closed: &Closed) -> EvenSeries {
        use std::f64::consts::PI;
        let pi2 = PI * PI;
        match *closed {
            Closed::Box { .. } => EvenSeries { prefactor: PI, a: vec![], b: vec![1.0], c: 0.25 },
            Closed::Rectangle { .. } => EvenSeries { prefactor: pi2, a: vec![0.5], b: vec![1.0, 1.0], c: 0.25 },
            Closed::Isosceles { .. } => EvenSeries {
                prefactor: pi2 / 2.0,
                a: vec![0.25, 0.5, 0.75],
                b: vec![1.0 / 3.0, 2.0 / 3.0, 1.0, 1.0],
                c: 16.0 / 27.0,
            },
            Closed::Equilateral { .. } => EvenSeries {
                prefactor: SQRT3 / 4.0 * pi2,
                a: vec![1.0 / 3.0, 2.0 / 3.0],
                b: vec![0.5, 1.0, 1.0],
                c: 27.0 / 16.0,
            },
            Closed::Circle(model) => {
                let a = 1.0 / model.m as f64;
                EvenSeries { prefactor: PI.powi(3), a: vec![a], b: vec![1.0, 1.0 + a], c: model.x_per_xi2() }
            }
        }
    }

    /// Coefficient of xi^2 relative to the value at zero, negated and doubled:
    /// the second moment of the amplitude.
    pub fn second_moment(&self) -> f64 {
        let ratio: f64 = self.a.iter().product::<f64>() / self.b.iter().product::<f64>();
        2.0 * self.c * ratio
    }
}
