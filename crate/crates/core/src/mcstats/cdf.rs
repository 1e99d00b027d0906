use rayon::prelude::*;

use crate::billiards::BilliardSpec;
use crate::distributions::{pdf_closed, DistributionForm};
use crate::error::{Error, Result};
use crate::quadrature::gauss_kronrod::gk21;
use crate::quadrature::{integrate_1d_with, Options1d};

const BASE_CELLS: usize = 256;
/// Nodes per halving of the distance to a singular point.
const NODES_PER_OCTAVE: i32 = 8;
/// Grading stops this far from a singular point (relative to its size).
const GRADING_FLOOR: f64 = 1e-12;
const CELL_ERROR_LIMIT: f64 = 1e-10;

/// Distribution function tabulated from a density on a mesh that is
/// uniform away from the singular points and geometric toward them, with
/// cubic Hermite interpolation using the density as slope. Cell masses use
/// the 21-point Kronrod rule, except for the cells that end on a singular
/// point, which are integrated adaptively.
#[derive(Clone, Debug)]
pub struct CdfTable {
    nodes: Vec<f64>,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl CdfTable {
    pub fn new<F: Fn(f64) -> f64 + Sync>(pdf: F, support: (f64, f64), singular: &[f64]) -> Result<Self> {
        let (lo, hi) = support;
        let h = (hi - lo) / BASE_CELLS as f64;
        let mut nodes: Vec<f64> = (0..=BASE_CELLS).map(|i| lo + h * i as f64).collect();
        nodes[BASE_CELLS] = hi;
        let singular: Vec<f64> = singular.iter().copied().filter(|&p| p >= lo && p <= hi).collect();
        for &p in &singular {
            nodes.push(p);
            let floor = GRADING_FLOOR * p.abs().max(h);
            let mut k = 0;
            loop {
                let d = 0.5 * (hi - lo) * 2f64.powf(-k as f64 / NODES_PER_OCTAVE as f64);
                if d < floor {
                    break;
                }
                nodes.extend([p - d, p + d].into_iter().filter(|&x| x > lo && x < hi));
                k += 1;
            }
        }
        nodes.sort_by(f64::total_cmp);
        nodes.dedup();
        let opts = Options1d { abs_tol: 1e-13, rel_tol: 1e-8, ..Default::default() };
        let masses = nodes
            .par_windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                if singular.contains(&a) || singular.contains(&b) {
                    // rounding in the density limits the attainable error
                    // next to an edge at |p| ~ 1; accept a small shortfall
                    let r = integrate_1d_with(&pdf, a, b, &opts)?;
                    if r.converged || r.error_estimate < CELL_ERROR_LIMIT {
                        Ok(r.value)
                    } else {
                        r.require("cell mass").map(|r| r.value)
                    }
                } else {
                    Ok(gk21(&pdf, a, b).0)
                }
            })
            .collect::<Result<Vec<f64>>>()?;
        let mut values = Vec::with_capacity(nodes.len());
        values.push(0.0);
        let mut acc = 0.0;
        for m in masses {
            acc += m;
            values.push(acc);
        }
        let slopes = nodes
            .par_iter()
            .map(|&x| {
                let v = if singular.contains(&x) { f64::NAN } else { pdf(x) };
                if v.is_finite() {
                    v
                } else {
                    f64::NAN
                }
            })
            .collect();
        Ok(CdfTable { nodes, values, slopes })
    }

    /// Table of the closed-form density of a state.
    pub fn for_spec(spec: &BilliardSpec) -> Result<Self> {
        let form = DistributionForm::new(spec)?;
        if !form.has_closed_form() {
            return Err(Error::NoClosedForm(format!("{spec} has no closed-form density")));
        }
        let pdf = |x: f64| pdf_closed(spec, x).unwrap_or(f64::NAN);
        Self::new(pdf, form.density_range(), &form.singular_points())
    }

    /// Mass of the whole table, ideally one.
    pub fn total(&self) -> f64 {
        *self.values.last().expect("nonempty table")
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let n = self.nodes.len();
        if x <= self.nodes[0] {
            return 0.0;
        }
        if x >= self.nodes[n - 1] {
            return self.total();
        }
        let i = self.nodes.partition_point(|&t| t <= x) - 1;
        let (x0, x1) = (self.nodes[i], self.nodes[i + 1]);
        let (f0, f1) = (self.values[i], self.values[i + 1]);
        let dx = x1 - x0;
        let secant = (f1 - f0) / dx;
        let d0 = if self.slopes[i].is_nan() { secant } else { self.slopes[i] };
        let d1 = if self.slopes[i + 1].is_nan() { secant } else { self.slopes[i + 1] };
        let t = (x - x0) / dx;
        let (t2, t3) = (t * t, t * t * t);
        let v = (2.0 * t3 - 3.0 * t2 + 1.0) * f0
            + (t3 - 2.0 * t2 + t) * dx * d0
            + (-2.0 * t3 + 3.0 * t2) * f1
            + (t3 - t2) * dx * d1;
        v.clamp(f0, f1)
    }
}
