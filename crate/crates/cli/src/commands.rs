use ampdist::billiards::BilliardSpec;
use ampdist::distributions::{
    cf_closed, cf_numeric, moment, normalization_constant, pdf_asymptotic, pdf_closed, DistributionForm, FtOracle,
};
use ampdist::mcstats::sample_amplitudes_with_bins;
use ampdist::Error;

use crate::args::{CfArgs, CfMethod, FtChoice, Grid, MomentsArgs, PdfArgs, SampleArgs};
use crate::error::Outcome;
use crate::output::{Cell, Table};

/// File name stem for a command on a state, e.g. `pdf_rectangle_2_1`.
pub fn stem(command: &str, spec: &BilliardSpec) -> String {
    let mut s = format!("{command}_{}_{}_{}", spec.shape, spec.m, spec.n);
    if spec.mode != ampdist::billiards::Mode::NA {
        s.push('_');
        s.push_str(&spec.mode.to_string());
    }
    s
}

pub fn cf(args: &CfArgs) -> Outcome<(Table, BilliardSpec)> {
    let spec = args.spec.build()?;
    let grid = args.grid.resolve(Grid { min: 0.0, max: 30.0, points: 61 })?;
    let form = DistributionForm::new(&spec)?;
    let closed = match args.method {
        CfMethod::Closed => true,
        CfMethod::Numeric => false,
        CfMethod::Auto => form.has_closed_form(),
    };
    let mut t = Table::new("cf", &["xi", "re", "im", "abs"]);
    t.meta("spec", spec)
        .meta("grid", format!("{} {} {}", grid.min, grid.max, grid.points))
        .meta("method", if closed { "closed" } else { "numeric" });
    if !closed {
        t.meta("tol", args.tol);
    }
    for xi in grid.values() {
        let phi = if closed { cf_closed(&spec, xi)? } else { cf_numeric(&spec, xi, args.tol)?.value };
        t.push(vec![Cell::num(xi), Cell::num(phi.re), Cell::num(phi.im), Cell::num(phi.norm())]);
    }
    Ok((t, spec))
}

/// Maps the outcome of a pointwise density evaluation onto a cell.
fn density_cell(r: ampdist::Result<f64>) -> Outcome<Cell> {
    match r {
        Ok(v) => Ok(Cell::num(v)),
        Err(Error::SingularPoint { .. }) => Ok(Cell::Singular),
        Err(Error::ExcludedPoint { .. }) => Ok(Cell::Excluded),
        Err(Error::NoClosedForm(_) | Error::UnsupportedShape(_)) => Ok(Cell::Na),
        Err(e) => Err(e.into()),
    }
}

pub fn pdf(args: &PdfArgs) -> Outcome<(Table, BilliardSpec)> {
    let spec = args.spec.build()?;
    let form = DistributionForm::new(&spec)?;
    let (lo, hi) = form.density_range();
    let grid = args.grid.resolve(Grid { min: lo, max: hi, points: 401 })?;
    let psis = grid.values();
    let use_ft = match args.ft {
        FtChoice::On => true,
        FtChoice::Off => false,
        FtChoice::Auto => form.has_closed_form(),
    };
    let oracle = if use_ft { Some(FtOracle::for_points(&spec, &psis)?) } else { None };
    let mut t = Table::new("pdf", &["psi", "closed", "ft_oracle", "asymptotic"]);
    t.meta("spec", spec).meta("grid", format!("{} {} {}", grid.min, grid.max, grid.points));
    for &psi in &psis {
        let closed = density_cell(pdf_closed(&spec, psi))?;
        let ft = match &oracle {
            Some(o) => density_cell(o.density_value(psi))?,
            None => Cell::Na,
        };
        let asymptotic = if psi < lo || psi > hi { Cell::Na } else { density_cell(pdf_asymptotic(&spec, psi))? };
        t.push(vec![Cell::num(psi), closed, ft, asymptotic]);
    }
    Ok((t, spec))
}

pub fn sample(args: &SampleArgs) -> Outcome<(Table, BilliardSpec)> {
    let spec = args.spec.build()?;
    let s = &args.sampling;
    let emp = sample_amplitudes_with_bins(&spec, s.samples, s.seed, s.bins)?;
    let mut t = Table::new("sample", &["bin_lo", "bin_hi", "mass", "density", "density_error"]);
    t.meta("spec", spec).meta("samples", s.samples).meta("seed", s.seed).meta("bins", s.bins);
    for i in 0..emp.bin_count() {
        t.push(vec![
            Cell::num(emp.bin_edges[i]),
            Cell::num(emp.bin_edges[i + 1]),
            Cell::num(emp.bin_masses[i]),
            Cell::num(emp.bin_density(i)),
            Cell::num(emp.bin_density_error(i)),
        ]);
    }
    Ok((t, spec))
}

pub fn moments(args: &MomentsArgs) -> Outcome<(Table, BilliardSpec)> {
    let spec = args.spec.build()?;
    let mut t = Table::new("moments", &["quantity", "value"]);
    t.meta("spec", spec);
    t.push(vec![Cell::label("moment_1"), Cell::num(moment(&spec, 1)?)]);
    t.push(vec![Cell::label("moment_2"), Cell::num(moment(&spec, 2)?)]);
    t.push(vec![Cell::label("normalization_constant"), Cell::num(normalization_constant(&spec)?)]);
    Ok((t, spec))
}
