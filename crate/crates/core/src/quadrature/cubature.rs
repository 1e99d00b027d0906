//! Two-dimensional integration by nested adaptive quadrature after mapping
//! the region onto a rectangle.

use std::cell::Cell;
use std::f64::consts::TAU;

use super::{integrate_1d_with, Options1d, QuadratureResult};
use crate::error::{Error, Result};

/// Integration regions used by the billiard domains.
#[derive(Clone, Debug, PartialEq)]
pub enum Region {
    Rectangle { x0: f64, x1: f64, y0: f64, y1: f64 },
    /// Triangle mapped by p = v0 + s[(v1 - v0) + t (v2 - v1)], Jacobian s |det|.
    Triangle([(f64, f64); 3]),
    Disk { cx: f64, cy: f64, radius: f64 },
}

impl Region {
    pub fn area(&self) -> f64 {
        match *self {
            Region::Rectangle { x0, x1, y0, y1 } => (x1 - x0) * (y1 - y0),
            Region::Triangle(v) => 0.5 * det(v).abs(),
            Region::Disk { radius, .. } => std::f64::consts::PI * radius * radius,
        }
    }
}

fn det(v: [(f64, f64); 3]) -> f64 {
    let (ax, ay) = (v[1].0 - v[0].0, v[1].1 - v[0].1);
    let (bx, by) = (v[2].0 - v[1].0, v[2].1 - v[1].1);
    ax * by - ay * bx
}

/// Integrates f(x, y) over the region to tolerance `tol` (absolute and relative).
pub fn integrate_2d<F: Fn(f64, f64) -> f64>(f: F, region: &Region, tol: f64) -> Result<QuadratureResult> {
    integrate_2d_with(f, region, tol, tol)
}

pub fn integrate_2d_with<F: Fn(f64, f64) -> f64>(
    f: F,
    region: &Region,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    if !(abs_tol > 0.0 || rel_tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    // maps (s, t) in [0,1]^2 or native ranges to (x, y, jacobian)
    let (outer, inner, map): ((f64, f64), (f64, f64), Box<dyn Fn(f64, f64) -> (f64, f64, f64)>) = match *region {
        Region::Rectangle { x0, x1, y0, y1 } => ((x0, x1), (y0, y1), Box::new(|x, y| (x, y, 1.0))),
        Region::Triangle(v) => {
            let dt = det(v).abs();
            (
                (0.0, 1.0),
                (0.0, 1.0),
                Box::new(move |s, t| {
                    let ex = (v[1].0 - v[0].0) + t * (v[2].0 - v[1].0);
                    let ey = (v[1].1 - v[0].1) + t * (v[2].1 - v[1].1);
                    (v[0].0 + s * ex, v[0].1 + s * ey, s * dt)
                }),
            )
        }
        Region::Disk { cx, cy, radius } => (
            (0.0, radius),
            (0.0, TAU),
            Box::new(move |r, th| (cx + r * th.cos(), cy + r * th.sin(), r)),
        ),
    };

    let outer_len = outer.1 - outer.0;
    let inner_err = Cell::new(0.0f64);
    let inner_evals = Cell::new(0usize);
    let inner_ok = Cell::new(true);
    let inner_opts = Options1d {
        abs_tol: 0.1 * abs_tol / outer_len.abs().max(1e-300),
        rel_tol: 0.1 * rel_tol,
        ..Options1d::default()
    };
    let g = |s: f64| -> f64 {
        let r = integrate_1d_with(
            |t| {
                let (x, y, j) = map(s, t);
                if j == 0.0 {
                    0.0
                } else {
                    f(x, y) * j
                }
            },
            inner.0,
            inner.1,
            &inner_opts,
        )
        .expect("inner bounds are finite");
        inner_err.set(inner_err.get().max(r.error_estimate));
        inner_evals.set(inner_evals.get() + r.evaluations);
        if !r.converged {
            inner_ok.set(false);
        }
        r.value
    };
    let outer_opts = Options1d { abs_tol: 0.9 * abs_tol, rel_tol: 0.9 * rel_tol, ..Options1d::default() };
    let r = integrate_1d_with(g, outer.0, outer.1, &outer_opts)?;
    Ok(QuadratureResult {
        value: r.value,
        error_estimate: r.error_estimate + inner_err.get() * outer_len.abs(),
        converged: r.converged && inner_ok.get(),
        evaluations: inner_evals.get(),
    })
}
