use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::EmpiricalDistribution;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_1d_with, Options1d};

/// Smallest expected count per cell after merging.
pub const MIN_EXPECTED: f64 = 5.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Number of cells after merging.
    pub cells: usize,
}

impl ChiSquare {
    fn new(statistic: f64, cells: usize) -> Result<Self> {
        let dof = cells - 1;
        let dist = ChiSquared::new(dof as f64).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        Ok(ChiSquare { statistic, dof, p_value: dist.sf(statistic), cells })
    }

    /// True when the hypothesis is rejected at significance `alpha`.
    pub fn rejects(&self, alpha: f64) -> bool {
        self.p_value < alpha
    }
}

/// Pearson statistic of the histogram against `pdf`, whose mass in each bin
/// comes from adaptive quadrature. Bins touching a point of `singular` are
/// merged, then neighbours are merged left to right until each cell expects
/// at least `MIN_EXPECTED` samples. The probability outside the binned
/// range forms one more cell (or joins the last cell when it is small).
pub fn chi_square<F: Fn(f64) -> f64>(emp: &EmpiricalDistribution, pdf: F, singular: &[f64]) -> Result<ChiSquare> {
    let n = emp.samples_count as f64;
    let edges = &emp.bin_edges;
    let mut cells: Vec<(f64, f64)> = Vec::with_capacity(emp.bin_count());
    for i in 0..emp.bin_count() {
        let (a, b) = (edges[i], edges[i + 1]);
        let inner: Vec<f64> = singular.iter().copied().filter(|&p| p > a && p < b).collect();
        let opts = Options1d { abs_tol: 1e-12, rel_tol: 1e-10, ..Default::default() }.with_breakpoints(&inner);
        let mass = integrate_1d_with(&pdf, a, b, &opts)?.require("bin mass")?.value;
        cells.push(((emp.bin_masses[i] * n).round(), mass * n));
    }
    let touches: Vec<bool> =
        (0..emp.bin_count()).map(|i| singular.iter().any(|&p| p >= edges[i] && p <= edges[i + 1])).collect();
    let mut merged = merge_flagged(&cells, &touches);
    let observed_out = n - cells.iter().map(|c| c.0).sum::<f64>();
    let expected_out = n - cells.iter().map(|c| c.1).sum::<f64>();
    merged = merge_small(merged, |c| c.1);
    if expected_out >= MIN_EXPECTED {
        merged.push((observed_out, expected_out));
    } else if let Some(last) = merged.last_mut() {
        last.0 += observed_out;
        last.1 += expected_out.max(0.0);
    }
    if merged.len() < 2 {
        return Err(Error::InsufficientMass(format!(
            "{} samples leave fewer than two cells with {MIN_EXPECTED} expected counts",
            emp.samples_count
        )));
    }
    let stat = merged.iter().map(|&(o, e)| (o - e).powi(2) / e).sum();
    ChiSquare::new(stat, merged.len())
}

/// Two-sample statistic for histograms on identical bins, with cells
/// merged until each holds at least `2 MIN_EXPECTED` pooled counts.
pub fn chi_square_two_sample(a: &EmpiricalDistribution, b: &EmpiricalDistribution) -> Result<ChiSquare> {
    if a.bin_edges != b.bin_edges {
        return Err(Error::InvalidArgument("two-sample chi-square needs identical bins".into()));
    }
    let (na, nb) = (a.samples_count as f64, b.samples_count as f64);
    let cells: Vec<(f64, f64)> =
        a.bin_masses.iter().zip(&b.bin_masses).map(|(&p, &q)| ((p * na).round(), (q * nb).round())).collect();
    let merged = merge_small(cells, |c| 0.5 * (c.0 + c.1));
    if merged.len() < 2 {
        return Err(Error::InsufficientMass("fewer than two populated cells".into()));
    }
    let (ka, kb) = ((nb / na).sqrt(), (na / nb).sqrt());
    let stat = merged.iter().map(|&(r, s)| (ka * r - kb * s).powi(2) / (r + s)).sum();
    ChiSquare::new(stat, merged.len())
}

/// Merges each run of consecutive flagged cells into one.
fn merge_flagged(cells: &[(f64, f64)], flagged: &[bool]) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(cells.len());
    for (i, &c) in cells.iter().enumerate() {
        if i > 0 && flagged[i] && flagged[i - 1] {
            let last = out.last_mut().expect("previous cell");
            last.0 += c.0;
            last.1 += c.1;
        } else {
            out.push(c);
        }
    }
    out
}

fn merge_small<S: Fn(&(f64, f64)) -> f64>(cells: Vec<(f64, f64)>, size: S) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::new();
    let mut acc = (0.0, 0.0);
    for c in cells {
        acc = (acc.0 + c.0, acc.1 + c.1);
        if size(&acc) >= MIN_EXPECTED {
            out.push(acc);
            acc = (0.0, 0.0);
        }
    }
    if acc != (0.0, 0.0) {
        match out.last_mut() {
            Some(last) => {
                last.0 += acc.0;
                last.1 += acc.1;
            }
            None => out.push(acc),
        }
    }
    out
}
