use std::path::PathBuf;

use ampdist::billiards::{BilliardSpec, Mode, Shape};
use ampdist::mcstats::{DEFAULT_BINS, DEFAULT_SEED};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Failure, Outcome};

#[derive(Debug, Parser)]
#[command(name = "ampdist", version, about = "Amplitude distributions of quantum billiard eigenstates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic function on a grid of xi.
    Cf(CfArgs),
    /// Closed-form, Fourier-inverted and small-amplitude densities on a grid.
    Pdf(PdfArgs),
    /// Histogram of Monte Carlo amplitudes.
    Sample(SampleArgs),
    /// Cross-checks closed form, Fourier inversion and Monte Carlo.
    Verify(VerifyArgs),
    /// Data series behind the published figures.
    Figure(FigureArgs),
    /// First and second moments and the normalization constant.
    Moments(MomentsArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Cf(_) => "cf",
            Command::Pdf(_) => "pdf",
            Command::Sample(_) => "sample",
            Command::Verify(_) => "verify",
            Command::Figure(_) => "figure",
            Command::Moments(_) => "moments",
        }
    }
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// box1d, rectangle, isosceles, equilateral, hemiequilateral or circle.
    #[arg(long)]
    pub shape: Shape,
    #[arg(short = 'm', default_value_t = 1)]
    pub m: u32,
    /// Second quantum number; not used by box1d.
    #[arg(short = 'n')]
    pub n: Option<u32>,
    /// cos or sin, for the equilateral family.
    #[arg(long)]
    pub mode: Option<Mode>,
}

impl SpecArgs {
    pub fn build(&self) -> Outcome<BilliardSpec> {
        let n = match (self.shape, self.n) {
            (Shape::Box1D, n) => n.unwrap_or(0),
            (_, Some(n)) => n,
            (shape, None) => return Err(Failure::Usage(format!("shape {shape} needs -n"))),
        };
        let spec = match self.mode {
            Some(mode) => BilliardSpec::with_mode(self.shape, self.m, n, mode)?,
            None => BilliardSpec::new(self.shape, self.m, n)?,
        };
        Ok(spec)
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; relative paths resolve against AMPDIST_OUTPUT_DIR when set.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// MIN MAX POINTS
    #[arg(long, num_args = 3, value_names = ["MIN", "MAX", "POINTS"], allow_negative_numbers = true)]
    pub grid: Option<Vec<f64>>,
}

/// Evenly spaced grid including both ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Grid {
    pub fn values(&self) -> Vec<f64> {
        let step = (self.max - self.min) / (self.points - 1) as f64;
        let mut v: Vec<f64> = (0..self.points).map(|i| self.min + step * i as f64).collect();
        v[self.points - 1] = self.max;
        v
    }
}

impl GridArgs {
    pub fn resolve(&self, default: Grid) -> Outcome<Grid> {
        let Some(g) = &self.grid else { return Ok(default) };
        let (min, max, points) = (g[0], g[1], g[2]);
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Failure::Usage(format!("grid needs finite MIN < MAX (got {min}, {max})")));
        }
        if points < 2.0 || points.fract() != 0.0 || points > 1e7 {
            return Err(Failure::Usage(format!("grid POINTS must be an integer of at least 2 (got {points})")));
        }
        Ok(Grid { min, max, points: points as usize })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CfMethod {
    Closed,
    Numeric,
    /// Closed form when one exists, quadrature otherwise.
    Auto,
}

#[derive(Debug, Args)]
pub struct CfArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = CfMethod::Auto)]
    pub method: CfMethod,
    /// Absolute tolerance of the quadrature route.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FtChoice {
    On,
    Off,
    /// On for states with a closed-form characteristic function.
    Auto,
}

#[derive(Debug, Args)]
pub struct PdfArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Fourier-inversion column.
    #[arg(long, value_enum, default_value_t = FtChoice::Auto)]
    pub ft: FtChoice,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    #[arg(short = 'N', long = "samples", default_value_t = 1_000_000)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FigureName {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub name: FigureName,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}
