//! Billiard shapes, their Dirichlet eigenfunctions and uniform sampling.
//!
//! All domains use the canonical size: unit side pi for the box, square and
//! triangles, radius pi for the disk. Eigenfunctions are unnormalized.

mod eigen;
mod geometry;
mod nodal;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use eigen::{eigenfunction, energy, Eigenstate};
pub use geometry::{rhombic_inverse, rhombic_map, sample_uniform, Domain, Point};
pub use nodal::{nodal_domain_count, tiling_class, TilingClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Box1D,
    Rectangle,
    IsoscelesRight,
    Equilateral,
    Hemiequilateral,
    Circle,
}

impl Shape {
    pub const ALL: [Shape; 6] = [
        Shape::Box1D,
        Shape::Rectangle,
        Shape::IsoscelesRight,
        Shape::Equilateral,
        Shape::Hemiequilateral,
        Shape::Circle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Box1D => "box1d",
            Shape::Rectangle => "rectangle",
            Shape::IsoscelesRight => "isosceles",
            Shape::Equilateral => "equilateral",
            Shape::Hemiequilateral => "hemiequilateral",
            Shape::Circle => "circle",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "box1d" | "box" => Ok(Shape::Box1D),
            "rectangle" | "square" => Ok(Shape::Rectangle),
            "isosceles" | "isoscelesright" => Ok(Shape::IsoscelesRight),
            "equilateral" => Ok(Shape::Equilateral),
            "hemiequilateral" => Ok(Shape::Hemiequilateral),
            "circle" | "disk" => Ok(Shape::Circle),
            other => Err(Error::InvalidSpec(format!("unknown shape '{other}'"))),
        }
    }
}

/// Selects between the symmetric (`Cos`) and antisymmetric (`Sin`)
/// equilateral families. `NA` for shapes without that choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Cos,
    Sin,
    #[default]
    NA,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cos => "cos",
            Mode::Sin => "sin",
            Mode::NA => "na",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cos" | "c" => Ok(Mode::Cos),
            "sin" | "s" => Ok(Mode::Sin),
            "na" | "none" => Ok(Mode::NA),
            other => Err(Error::InvalidSpec(format!("unknown mode '{other}'"))),
        }
    }
}

/// A billiard eigenstate label. Construct through [`BilliardSpec::new`] or
/// [`BilliardSpec::with_mode`] so that the quantum numbers are validated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BilliardSpec {
    pub shape: Shape,
    pub m: u32,
    pub n: u32,
    pub mode: Mode,
}

impl BilliardSpec {
    /// Spec with the default mode for the shape: `Cos` for the equilateral
    /// triangle, `Sin` for the hemiequilateral one.
    pub fn new(shape: Shape, m: u32, n: u32) -> Result<Self> {
        let mode = match shape {
            Shape::Equilateral => Mode::Cos,
            Shape::Hemiequilateral => Mode::Sin,
            _ => Mode::NA,
        };
        Self::with_mode(shape, m, n, mode)
    }

    pub fn with_mode(shape: Shape, m: u32, n: u32, mode: Mode) -> Result<Self> {
        let spec = BilliardSpec { shape, m, n, mode };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let BilliardSpec { shape, m, n, mode } = *self;
        let bad = |msg: String| Err(Error::InvalidSpec(format!("{shape} ({m},{n}): {msg}")));
        let triangle = matches!(shape, Shape::Equilateral | Shape::Hemiequilateral);
        if triangle {
            if mode == Mode::NA {
                return bad("equilateral-family states need mode cos or sin".into());
            }
        } else if mode != Mode::NA {
            return bad(format!("mode {mode} only applies to equilateral-family states"));
        }
        match shape {
            Shape::Box1D if m == 0 => bad("m must be positive".into()),
            Shape::Rectangle if m == 0 || n == 0 => bad("m and n must be positive".into()),
            Shape::IsoscelesRight if m == 0 || n == 0 => bad("m and n must be positive".into()),
            Shape::IsoscelesRight if m == n => bad("the wavefunction vanishes identically for m = n".into()),
            Shape::Circle if n == 0 => bad("n must be at least 1".into()),
            _ if triangle && (m == 0 || n == 0) => bad("m and n must be positive".into()),
            _ if triangle && !eigen::is_nonzero(self) => bad(format!("the {mode} mode vanishes identically")),
            _ => Ok(()),
        }
    }

    pub fn domain(&self) -> Domain {
        Domain::new(self.shape)
    }
}

impl fmt::Display for BilliardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            Shape::Box1D => write!(f, "box1d m={}", self.m),
            Shape::Equilateral | Shape::Hemiequilateral => {
                write!(f, "{} m={} n={} mode={}", self.shape, self.m, self.n, self.mode)
            }
            _ => write!(f, "{} m={} n={}", self.shape, self.m, self.n),
        }
    }
}
