//! Tanh-sinh (double exponential) quadrature for integrands with endpoint
//! singularities. Closer to an endpoint than floating point can resolve, the
//! integrand is replaced by a power law fitted just outside that zone.

use std::cell::Cell;
use std::f64::consts::FRAC_PI_2;

use super::QuadratureResult;

const MAX_LEVEL: usize = 12;
const T_MAX: f64 = 6.5;

pub fn tanh_sinh<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> QuadratureResult {
    let c = 0.5 * (a + b);
    let d = 0.5 * (b - a);
    let evaluations = Cell::new(0usize);
    let left = EndModel::fit(f, a, 1.0, d, &evaluations);
    let right = EndModel::fit(f, b, -1.0, d, &evaluations);

    // weighted contribution of the nodes at +-t
    let eval_pair = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let ch = u.cosh();
        let w = FRAC_PI_2 * t.cosh() / (ch * ch);
        // distance from the nearer endpoint, without cancellation
        let delta = d * 2.0 / ((2.0 * u.abs()).exp() + 1.0);
        if t == 0.0 {
            evaluations.set(evaluations.get() + 1);
            let v = f(c);
            return if v.is_finite() { v * w * d } else { 0.0 };
        }
        let mut s = 0.0;
        for (model, x) in [(&left, a + delta), (&right, b - delta)] {
            let v = if delta < model.cutoff {
                model.eval(delta)
            } else {
                evaluations.set(evaluations.get() + 1);
                f(x)
            };
            if v.is_finite() {
                s += v;
            }
        }
        s * w * d
    };

    let mut h = 1.0;
    let mut sum = eval_pair(0.0);
    let mut k = 1;
    while k as f64 * h <= T_MAX {
        sum += eval_pair(k as f64 * h);
        k += 1;
    }
    let mut estimate = sum * h;
    let mut best = (estimate, f64::INFINITY);
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        // add the odd multiples of the new step
        let mut k = 1;
        while k as f64 * h <= T_MAX {
            sum += eval_pair(k as f64 * h);
            k += 2;
        }
        let next = sum * h;
        let err = (next - estimate).abs();
        estimate = next;
        if err < best.1 {
            best = (estimate, err);
        }
        if err <= abs_tol.max(rel_tol * estimate.abs()) && level >= 3 {
            return QuadratureResult { value: estimate, error_estimate: err, converged: true, evaluations: evaluations.get() };
        }
    }
    QuadratureResult { value: best.0, error_estimate: best.1, converged: false, evaluations: evaluations.get() }
}

/// Power law f(end + dir * delta) ~ f_c (delta / cutoff)^alpha used below the
/// cutoff distance from an endpoint.
struct EndModel {
    cutoff: f64,
    value: f64,
    alpha: f64,
}

impl EndModel {
    fn fit<F: Fn(f64) -> f64 + ?Sized>(f: &F, end: f64, dir: f64, half_width: f64, evaluations: &Cell<usize>) -> Self {
        // A power of two relative to the endpoint keeps end +- 4 cutoff exact.
        let cutoff = if end == 0.0 {
            1e-280
        } else {
            2f64.powi(end.abs().log2().floor() as i32 - 30)
        };
        let cutoff = cutoff.min(half_width * 1e-3);
        evaluations.set(evaluations.get() + 2);
        let near = f(end + dir * cutoff);
        let far = f(end + dir * 4.0 * cutoff);
        if !near.is_finite() {
            return EndModel { cutoff, value: 0.0, alpha: 0.0 };
        }
        let alpha = if far.is_finite() && near * far > 0.0 {
            ((near / far).ln() / 0.25f64.ln()).clamp(-0.999, 4.0)
        } else {
            0.0
        };
        EndModel { cutoff, value: near, alpha }
    }

    fn eval(&self, delta: f64) -> f64 {
        if self.alpha == 0.0 {
            self.value
        } else {
            self.value * (delta / self.cutoff).powf(self.alpha)
        }
    }
}
