use std::f64::consts::{PI, TAU};

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::Shape;
use crate::quadrature::Region;

const SQRT3: f64 = 1.732_050_807_568_877_2;
/// Slack for containment tests of points computed on a boundary.
const EDGE_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// A billiard table at canonical size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domain {
    pub shape: Shape,
}

impl Domain {
    pub fn new(shape: Shape) -> Self {
        Domain { shape }
    }

    /// Length of the interval for the box, area otherwise.
    pub fn area(&self) -> f64 {
        match self.shape {
            Shape::Box1D => PI,
            Shape::Rectangle => PI * PI,
            Shape::IsoscelesRight => PI * PI / 2.0,
            Shape::Equilateral => SQRT3 * PI * PI / 4.0,
            Shape::Hemiequilateral => SQRT3 * PI * PI / 8.0,
            Shape::Circle => PI.powi(3),
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        let Point { x, y } = p;
        if !x.is_finite() || !y.is_finite() {
            return false;
        }
        let e = EDGE_SLACK;
        match self.shape {
            Shape::Box1D => (-e..=PI + e).contains(&x),
            Shape::Rectangle => (-e..=PI + e).contains(&x) && (-e..=PI + e).contains(&y),
            Shape::IsoscelesRight => y >= -e && x <= PI + e && y <= x + e,
            Shape::Equilateral => y >= -e && y <= SQRT3 * x + 2.0 * e && y <= SQRT3 * (PI - x) + 2.0 * e,
            Shape::Hemiequilateral => y >= -e && x <= PI / 2.0 + e && y <= SQRT3 * x + 2.0 * e,
            Shape::Circle => x.hypot(y) <= PI + e,
        }
    }

    /// Integration region for the 2-D shapes; `None` for the box.
    pub fn region(&self) -> Option<Region> {
        let h = SQRT3 * PI / 2.0;
        match self.shape {
            Shape::Box1D => None,
            Shape::Rectangle => Some(Region::Rectangle { x0: 0.0, x1: PI, y0: 0.0, y1: PI }),
            Shape::IsoscelesRight => Some(Region::Triangle([(0.0, 0.0), (PI, 0.0), (PI, PI)])),
            Shape::Equilateral => Some(Region::Triangle([(0.0, 0.0), (PI, 0.0), (PI / 2.0, h)])),
            Shape::Hemiequilateral => Some(Region::Triangle([(0.0, 0.0), (PI / 2.0, 0.0), (PI / 2.0, h)])),
            Shape::Circle => Some(Region::Disk { cx: 0.0, cy: 0.0, radius: PI }),
        }
    }

    /// Walks the boundary once as t goes over [0, 1).
    pub fn boundary_point(&self, t: f64) -> Point {
        let t = t.rem_euclid(1.0);
        match self.shape {
            Shape::Box1D => Point::new(if t < 0.5 { 0.0 } else { PI }, 0.0),
            Shape::Circle => Point::new(PI * (TAU * t).cos(), PI * (TAU * t).sin()),
            _ => {
                let verts = self.vertices();
                let k = verts.len();
                let s = t * k as f64;
                let i = (s.floor() as usize).min(k - 1);
                let f = s - i as f64;
                let (a, b) = (verts[i], verts[(i + 1) % k]);
                Point::new(a.0 + f * (b.0 - a.0), a.1 + f * (b.1 - a.1))
            }
        }
    }

    fn vertices(&self) -> Vec<(f64, f64)> {
        let h = SQRT3 * PI / 2.0;
        match self.shape {
            Shape::Rectangle => vec![(0.0, 0.0), (PI, 0.0), (PI, PI), (0.0, PI)],
            Shape::IsoscelesRight => vec![(0.0, 0.0), (PI, 0.0), (PI, PI)],
            Shape::Equilateral => vec![(0.0, 0.0), (PI, 0.0), (PI / 2.0, h)],
            Shape::Hemiequilateral => vec![(0.0, 0.0), (PI / 2.0, 0.0), (PI / 2.0, h)],
            Shape::Box1D | Shape::Circle => Vec::new(),
        }
    }
}

/// Rhombic coordinates u = x - y/sqrt3, v = 2y/sqrt3. The rhombus made of
/// the equilateral triangle and its mirror image maps onto [0, pi]^2.
pub fn rhombic_map(p: Point) -> (f64, f64) {
    (p.x - p.y / SQRT3, 2.0 * p.y / SQRT3)
}

pub fn rhombic_inverse(u: f64, v: f64) -> Point {
    Point::new(u + 0.5 * v, 0.5 * SQRT3 * v)
}

/// Uniform point in the domain. Triangles are sampled on a covering
/// parallelogram and folded back, the disk through r = pi sqrt(U).
pub fn sample_uniform<R: Rng + ?Sized>(domain: &Domain, rng: &mut R) -> Point {
    let a: f64 = rng.random();
    let b: f64 = rng.random();
    match domain.shape {
        Shape::Box1D => Point::new(PI * a, 0.0),
        Shape::Rectangle => Point::new(PI * a, PI * b),
        Shape::IsoscelesRight => {
            let (x, y) = (PI * a, PI * b);
            Point::new(x.max(y), x.min(y))
        }
        Shape::Equilateral | Shape::Hemiequilateral => {
            let (mut u, mut v) = (PI * a, PI * b);
            if u + v > PI {
                u = PI - u;
                v = PI - v;
            }
            let mut p = rhombic_inverse(u, v);
            if domain.shape == Shape::Hemiequilateral && p.x > PI / 2.0 {
                p.x = PI - p.x;
            }
            p
        }
        Shape::Circle => {
            let r = PI * a.sqrt();
            let th = TAU * b;
            Point::new(r * th.cos(), r * th.sin())
        }
    }
}
