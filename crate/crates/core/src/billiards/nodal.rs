use serde::{Deserialize, Serialize};

use super::{BilliardSpec, Shape};
use crate::error::{Error, Result};

/// Number of nodal domains of a rectangle state, m n.
pub fn nodal_domain_count(spec: &BilliardSpec) -> Result<u64> {
    spec.validate()?;
    if spec.shape != Shape::Rectangle {
        return Err(Error::UnsupportedShape(format!("nodal domain count is only known for rectangles, not {}", spec.shape)));
    }
    Ok(spec.m as u64 * spec.n as u64)
}

/// How an isosceles state decomposes into copies of a lower state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingClass {
    /// True when m + n is even (antisymmetric about the altitude) or the
    /// quantum numbers share a factor.
    pub is_tiled: bool,
    pub d: u32,
    /// (m/d, n/d) when d > 1.
    pub parent: Option<BilliardSpec>,
}

pub fn tiling_class(spec: &BilliardSpec) -> Result<TilingClass> {
    spec.validate()?;
    if spec.shape != Shape::IsoscelesRight {
        return Err(Error::UnsupportedShape(format!("tiling classes are defined for isosceles states, not {}", spec.shape)));
    }
    let d = gcd(spec.m, spec.n);
    let parent = if d > 1 { Some(BilliardSpec::new(Shape::IsoscelesRight, spec.m / d, spec.n / d)?) } else { None };
    Ok(TilingClass { is_tiled: (spec.m + spec.n) % 2 == 0 || d > 1, d, parent })
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
