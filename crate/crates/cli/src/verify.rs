//! The oracle triangle for one state: closed form against Fourier
//! inversion pointwise, closed form against Monte Carlo through the KS
//! distance, Fourier inversion against Monte Carlo bin by bin, and the
//! first two moments against Monte Carlo.

use ampdist::billiards::{BilliardSpec, Shape};
use ampdist::distributions::{moment, pdf_closed, DistributionForm, FtOracle};
use ampdist::mcstats::{ks_critical_value, ks_statistic, sample_amplitudes_with_bins, CdfTable, EmpiricalDistribution};
use ampdist::Error;

use crate::args::VerifyArgs;
use crate::error::Outcome;
use crate::output::{Cell, Table};

pub const FT_POINTS: usize = 30;
/// Distance of the comparison points from singular points, in units of the
/// amplitude scale.
pub const FT_MARGIN: f64 = 0.05;
pub const FT_TOLERANCE: f64 = 1e-3;
pub const KS_ALPHA: f64 = 0.001;
pub const BIN_SIGMAS: f64 = 5.0;
pub const MOMENT_SIGMAS: f64 = 4.0;
pub const NORMALIZATION_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub statistic: f64,
    pub threshold: f64,
    pub status: Status,
}

impl Check {
    fn at_most(name: &'static str, statistic: f64, threshold: f64) -> Self {
        let status = if statistic <= threshold { Status::Pass } else { Status::Fail };
        Check { name, statistic, threshold, status }
    }

    fn skipped(name: &'static str, threshold: f64) -> Self {
        Check { name, statistic: f64::NAN, threshold, status: Status::Skip }
    }
}

/// Amplitude unit of the state: the model support for the disk, 1 otherwise.
fn amplitude_scale(form: &DistributionForm) -> f64 {
    if form.spec.shape == Shape::Circle {
        form.support.1
    } else {
        1.0
    }
}

/// `count` points spread evenly over the density range with windows of
/// half-width `margin` (times the amplitude scale) removed around every
/// singular point.
pub fn check_points(form: &DistributionForm, count: usize, margin: f64) -> Vec<f64> {
    let (lo, hi) = form.density_range();
    let w = margin * amplitude_scale(form);
    let mut cuts: Vec<f64> = form.singular_points().into_iter().filter(|&p| p >= lo && p <= hi).collect();
    cuts.extend([lo, hi]);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let pieces: Vec<(f64, f64)> =
        cuts.windows(2).map(|c| (c[0] + w, c[1] - w)).filter(|(a, b)| b > a).collect();
    let total: f64 = pieces.iter().map(|(a, b)| b - a).sum();
    (0..count)
        .filter_map(|j| {
            let mut s = total * (j as f64 + 0.5) / count as f64;
            for &(a, b) in &pieces {
                if s <= b - a {
                    return Some(a + s);
                }
                s -= b - a;
            }
            None
        })
        .collect()
}

fn closed_vs_ft(spec: &BilliardSpec, oracle: &FtOracle, points: &[f64]) -> Outcome<Check> {
    let mut worst: f64 = 0.0;
    for &psi in points {
        let ft = oracle.density_value(psi)?;
        worst = worst.max((pdf_closed(spec, psi)? - ft).abs());
    }
    Ok(Check::at_most("closed_vs_ft", worst, FT_TOLERANCE))
}

/// Largest standardized difference between histogram and inverted masses
/// over the bins holding the comparison points.
fn ft_vs_mc(oracle: &FtOracle, emp: &EmpiricalDistribution, bins: &[usize]) -> Outcome<Option<f64>> {
    let n = emp.samples_count as f64;
    let mut worst: Option<f64> = None;
    for &i in bins {
        let mass = match oracle.mass(emp.bin_edges[i], emp.bin_edges[i + 1]) {
            Ok(m) => m,
            Err(Error::ExcludedPoint { .. } | Error::InvalidArgument(_)) => continue,
            Err(e) => return Err(e.into()),
        };
        let p = mass.clamp(1.0 / n, 1.0);
        let z = (emp.bin_masses[i] - mass).abs() / (p * (1.0 - p) / n).sqrt().max(1.0 / n);
        worst = Some(worst.map_or(z, |w| w.max(z)));
    }
    Ok(worst)
}

fn bins_holding(emp: &EmpiricalDistribution, points: &[f64]) -> Vec<usize> {
    let edges = &emp.bin_edges;
    let mut bins: Vec<usize> = points
        .iter()
        .filter(|&&p| p >= edges[0] && p < edges[edges.len() - 1])
        .map(|&p| edges.partition_point(|&e| e <= p) - 1)
        .collect();
    bins.dedup();
    bins
}

fn moment_check(name: &'static str, spec: &BilliardSpec, emp: &EmpiricalDistribution, k: u32) -> Outcome<Check> {
    let exact = moment(spec, k)?;
    let (mc, se) = emp.moment(k as i32);
    Ok(Check::at_most(name, (mc - exact).abs() / se.max(f64::MIN_POSITIVE), MOMENT_SIGMAS))
}

pub fn run_checks(spec: &BilliardSpec, samples: usize, seed: u64, bins: usize) -> Outcome<Vec<Check>> {
    let form = DistributionForm::new(spec)?;
    let emp = sample_amplitudes_with_bins(spec, samples, seed, bins)?;
    let ks_threshold = ks_critical_value(samples, KS_ALPHA);
    let mut checks = Vec::new();
    if form.has_closed_form() {
        let points = check_points(&form, FT_POINTS, FT_MARGIN);
        let held = bins_holding(&emp, &points);
        let mut oracle_points = points.clone();
        oracle_points.extend(held.iter().flat_map(|&i| [emp.bin_edges[i], emp.bin_edges[i + 1]]));
        let oracle = FtOracle::for_points(spec, &oracle_points)?;
        checks.push(closed_vs_ft(spec, &oracle, &points)?);

        let table = CdfTable::for_spec(spec)?;
        checks.push(Check::at_most("closed_normalization", (table.total() - 1.0).abs(), NORMALIZATION_TOLERANCE));
        checks.push(Check::at_most("ks_closed_vs_mc", ks_statistic(&emp, |x| table.cdf(x)), ks_threshold));

        checks.push(match ft_vs_mc(&oracle, &emp, &held)? {
            Some(z) => Check::at_most("ft_vs_mc_bins", z, BIN_SIGMAS),
            None => Check::skipped("ft_vs_mc_bins", BIN_SIGMAS),
        });
    } else {
        checks.push(Check::skipped("closed_vs_ft", FT_TOLERANCE));
        checks.push(Check::skipped("closed_normalization", NORMALIZATION_TOLERANCE));
        checks.push(Check::skipped("ks_closed_vs_mc", ks_threshold));
        checks.push(Check::skipped("ft_vs_mc_bins", BIN_SIGMAS));
    }
    checks.push(moment_check("moment_1_vs_mc", spec, &emp, 1)?);
    checks.push(moment_check("moment_2_vs_mc", spec, &emp, 2)?);
    Ok(checks)
}

/// The verification table and whether every check that ran passed.
pub fn verify(args: &VerifyArgs) -> Outcome<(Table, BilliardSpec, bool)> {
    let spec = args.spec.build()?;
    let s = &args.sampling;
    let checks = run_checks(&spec, s.samples, s.seed, s.bins)?;
    let mut t = Table::new("verify", &["check", "statistic", "threshold", "result"]);
    t.meta("spec", spec).meta("samples", s.samples).meta("seed", s.seed).meta("bins", s.bins);
    for c in &checks {
        let result = match c.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        };
        t.push(vec![Cell::label(c.name), Cell::num(c.statistic), Cell::num(c.threshold), Cell::label(result)]);
    }
    let ok = checks.iter().all(|c| c.status != Status::Fail);
    Ok((t, spec, ok))
}
