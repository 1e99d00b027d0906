//! Data behind the published figures, in long format: one row per point,
//! tagged with the series it belongs to. Curve figures have columns
//! (series, x, y); the wavefunction contour figures add the amplitude as a
//! fourth column over a square grid covering the domain.

use ampdist::billiards::{BilliardSpec, Eigenstate, Mode, Point, Shape};
use ampdist::distributions::{cf_closed, pdf_closed, DistributionForm};
use ampdist::mcstats::sample_amplitudes_with_bins;
use ampdist::Error;

use crate::args::{FigureArgs, FigureName, SamplingArgs};
use crate::error::Outcome;
use crate::output::{Cell, Table};

const CF_XI_MAX: f64 = 30.0;
const CF_POINTS: usize = 301;
const PDF_POINTS: usize = 401;
const CONTOUR_POINTS: usize = 101;

fn label(spec: &BilliardSpec) -> String {
    match spec.shape {
        Shape::Box1D => format!("m{}", spec.m),
        _ => format!("{}_{}", spec.m, spec.n),
    }
}

fn spec(shape: Shape, m: u32, n: u32) -> Outcome<BilliardSpec> {
    Ok(BilliardSpec::new(shape, m, n)?)
}

fn cf_series(t: &mut Table, spec: &BilliardSpec, part: &str) -> Outcome<()> {
    let name = format!("cf_{part}_{}", label(spec));
    for j in 0..CF_POINTS {
        let xi = CF_XI_MAX * j as f64 / (CF_POINTS - 1) as f64;
        let phi = cf_closed(spec, xi)?;
        let y = if part == "re" { phi.re } else { phi.norm() };
        t.push(vec![Cell::label(&name), Cell::num(xi), Cell::num(y)]);
    }
    Ok(())
}

fn pdf_series(t: &mut Table, spec: &BilliardSpec) -> Outcome<()> {
    let name = format!("pdf_{}", label(spec));
    let (lo, hi) = DistributionForm::new(spec)?.density_range();
    for j in 0..PDF_POINTS {
        let psi = if j == PDF_POINTS - 1 { hi } else { lo + (hi - lo) * j as f64 / (PDF_POINTS - 1) as f64 };
        let y = match pdf_closed(spec, psi) {
            Ok(v) => Cell::num(v),
            Err(Error::SingularPoint { .. }) => Cell::Singular,
            Err(e) => return Err(e.into()),
        };
        t.push(vec![Cell::label(&name), Cell::num(psi), y]);
    }
    Ok(())
}

fn histogram_series(t: &mut Table, spec: &BilliardSpec, s: &SamplingArgs) -> Outcome<()> {
    let name = format!("hist_{}", label(spec));
    let emp = sample_amplitudes_with_bins(spec, s.samples, s.seed, s.bins)?;
    for i in 0..emp.bin_count() {
        let centre = 0.5 * (emp.bin_edges[i] + emp.bin_edges[i + 1]);
        t.push(vec![Cell::label(&name), Cell::num(centre), Cell::num(emp.bin_density(i))]);
    }
    Ok(())
}

/// Amplitude on a grid over the bounding box of the domain, `na` outside.
fn contour_series(t: &mut Table, spec: &BilliardSpec) -> Outcome<()> {
    let name = format!("psi_{}", label(spec));
    let domain = spec.domain();
    let state = Eigenstate::new(*spec)?;
    let boundary: Vec<Point> = (0..1200).map(|k| domain.boundary_point(k as f64 / 1200.0)).collect();
    let fold = |f: fn(f64, f64) -> f64, init: f64, sel: fn(&Point) -> f64| boundary.iter().map(sel).fold(init, f);
    let (x0, x1) = (fold(f64::min, f64::INFINITY, |p| p.x), fold(f64::max, f64::NEG_INFINITY, |p| p.x));
    let (y0, y1) = (fold(f64::min, f64::INFINITY, |p| p.y), fold(f64::max, f64::NEG_INFINITY, |p| p.y));
    let step = |a: f64, b: f64, k: usize| a + (b - a) * k as f64 / (CONTOUR_POINTS - 1) as f64;
    for i in 0..CONTOUR_POINTS {
        for j in 0..CONTOUR_POINTS {
            let p = Point::new(step(x0, x1, i), step(y0, y1, j));
            let v = if domain.contains(p) { Cell::num(state.amplitude(p.x, p.y)) } else { Cell::Na };
            t.push(vec![Cell::label(&name), Cell::num(p.x), Cell::num(p.y), v]);
        }
    }
    Ok(())
}

/// The `count` lowest hemiequilateral levels, one state per level.
fn hemiequilateral_levels(count: usize) -> Outcome<Vec<BilliardSpec>> {
    let mut states: Vec<(f64, BilliardSpec)> = Vec::new();
    for m in 1..=8 {
        for n in 1..=8 {
            for mode in [Mode::Sin, Mode::Cos] {
                if let Ok(s) = BilliardSpec::with_mode(Shape::Hemiequilateral, m, n, mode) {
                    states.push((Eigenstate::new(s)?.laplacian_eigenvalue(), s));
                }
            }
        }
    }
    states.sort_by(|a, b| a.0.total_cmp(&b.0));
    states.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9);
    Ok(states.into_iter().take(count).map(|(_, s)| s).collect())
}

pub fn figure(args: &FigureArgs) -> Outcome<Table> {
    let s = &args.sampling;
    let name = format!("{:?}", args.name).to_lowercase();
    let contour = matches!(args.name, FigureName::Fig3 | FigureName::Fig5);
    let columns: &[&str] = if contour { &["series", "x", "y", "psi"] } else { &["series", "x", "y"] };
    let mut t = Table::new("figure", columns);
    t.meta("figure", &name);
    let sampled = matches!(args.name, FigureName::Fig1 | FigureName::Fig7);
    if sampled {
        t.meta("samples", s.samples).meta("seed", s.seed).meta("bins", s.bins);
    }
    match args.name {
        FigureName::Fig1 => {
            let states = [spec(Shape::Box1D, 1, 0)?, spec(Shape::Box1D, 2, 0)?, spec(Shape::Box1D, 3, 0)?];
            for st in &states {
                cf_series(&mut t, st, "abs")?;
            }
            for st in &states {
                pdf_series(&mut t, st)?;
                histogram_series(&mut t, st, s)?;
            }
        }
        FigureName::Fig2 => {
            let states = [spec(Shape::Rectangle, 1, 1)?, spec(Shape::Rectangle, 2, 1)?, spec(Shape::Rectangle, 3, 3)?];
            for st in &states {
                cf_series(&mut t, st, "abs")?;
            }
            for st in &states {
                pdf_series(&mut t, st)?;
            }
        }
        FigureName::Fig3 => {
            for (m, n) in [(1, 1), (3, 2), (3, 3)] {
                contour_series(&mut t, &spec(Shape::Rectangle, m, n)?)?;
            }
        }
        FigureName::Fig4 => {
            let states = [spec(Shape::IsoscelesRight, 1, 2)?, spec(Shape::IsoscelesRight, 1, 3)?];
            for st in &states {
                cf_series(&mut t, st, "abs")?;
            }
            for st in &states {
                pdf_series(&mut t, st)?;
            }
        }
        FigureName::Fig5 => {
            for (m, n) in [(1, 2), (1, 3), (2, 6)] {
                contour_series(&mut t, &spec(Shape::IsoscelesRight, m, n)?)?;
            }
        }
        FigureName::Fig6 => {
            let st = spec(Shape::Equilateral, 1, 2)?;
            cf_series(&mut t, &st, "re")?;
            pdf_series(&mut t, &st)?;
        }
        FigureName::Fig7 => {
            for st in hemiequilateral_levels(2)? {
                t.meta("state", st);
                histogram_series(&mut t, &st, s)?;
            }
        }
    }
    Ok(t)
}
