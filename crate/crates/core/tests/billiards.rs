use std::f64::consts::PI;

use ampdist::billiards::{
    eigenfunction, energy, nodal_domain_count, rhombic_inverse, rhombic_map, sample_uniform, tiling_class,
    BilliardSpec, Domain, Eigenstate, Mode, Point, Shape,
};
use ampdist::specialfn::bessel_j_zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

const SQRT3: f64 = 1.732_050_807_568_877_2;

fn spec(shape: Shape, m: u32, n: u32) -> BilliardSpec {
    BilliardSpec::new(shape, m, n).unwrap()
}

fn states() -> Vec<BilliardSpec> {
    let mut v = vec![
        spec(Shape::Box1D, 1, 1),
        spec(Shape::Box1D, 4, 1),
        spec(Shape::Rectangle, 1, 1),
        spec(Shape::Rectangle, 3, 2),
        spec(Shape::Rectangle, 3, 3),
        spec(Shape::IsoscelesRight, 1, 2),
        spec(Shape::IsoscelesRight, 1, 3),
        spec(Shape::IsoscelesRight, 2, 6),
        spec(Shape::IsoscelesRight, 5, 2),
        spec(Shape::Equilateral, 1, 2),
        spec(Shape::Equilateral, 1, 3),
        spec(Shape::Equilateral, 2, 5),
        spec(Shape::Hemiequilateral, 1, 3),
        spec(Shape::Circle, 0, 1),
        spec(Shape::Circle, 3, 2),
        spec(Shape::Circle, 20, 10),
    ];
    v.push(BilliardSpec::with_mode(Shape::Equilateral, 1, 3, Mode::Sin).unwrap());
    v.push(BilliardSpec::with_mode(Shape::Hemiequilateral, 2, 5, Mode::Cos).unwrap());
    v
}

#[test]
fn eigenfunction_examples() {
    let r = eigenfunction(&spec(Shape::Rectangle, 1, 1), Point::new(PI / 2.0, PI / 2.0)).unwrap();
    assert!((r - 1.0).abs() < 1e-15);

    let iso = spec(Shape::IsoscelesRight, 1, 2);
    let d = iso.domain();
    for i in 0..50 {
        let p = d.boundary_point(i as f64 / 50.0 + 0.0031);
        assert!(eigenfunction(&iso, p).unwrap().abs() < 1e-12);
    }

    let eq = spec(Shape::Equilateral, 1, 2);
    let p = rhombic_inverse(PI / 3.0, PI / 3.0);
    let v = eigenfunction(&eq, p).unwrap();
    assert!((v - 1.5 * SQRT3).abs() < 1e-12, "{v}");
}

#[test]
fn points_outside_are_rejected() {
    let e = eigenfunction(&spec(Shape::IsoscelesRight, 1, 2), Point::new(0.5, 1.0)).unwrap_err();
    assert_eq!(e.kind(), "outside_domain");
    assert!(eigenfunction(&spec(Shape::Circle, 1, 1), Point::new(3.0, 1.0)).is_err());
    assert!(eigenfunction(&spec(Shape::Hemiequilateral, 1, 3), Point::new(2.0, 0.1)).is_err());
    assert!(eigenfunction(&spec(Shape::Rectangle, 1, 1), Point::new(f64::NAN, 0.0)).is_err());
}

#[test]
fn rhombic_map_examples() {
    assert_eq!(rhombic_map(Point::new(0.0, 0.0)), (0.0, 0.0));
    let (u, v) = rhombic_map(Point::new(PI / 2.0, SQRT3 * PI / 2.0));
    assert!(u.abs() < 1e-15 && (v - PI).abs() < 1e-15);
    let (u, v) = rhombic_map(Point::new(1.5 * PI, SQRT3 * PI / 2.0));
    assert!((u - PI).abs() < 1e-15 && (v - PI).abs() < 1e-15);
}

proptest! {
    #[test]
    fn rhombic_round_trip(x in -5.0f64..5.0, y in -5.0f64..5.0) {
        let (u, v) = rhombic_map(Point::new(x, y));
        let p = rhombic_inverse(u, v);
        prop_assert!((p.x - x).abs() < 1e-14 && (p.y - y).abs() < 1e-14);
    }

    #[test]
    fn equilateral_ground_state_product_form(a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let (mut u, mut v) = (PI * a, PI * b);
        if u + v > PI {
            u = PI - u;
            v = PI - v;
        }
        let st = Eigenstate::new(spec(Shape::Equilateral, 1, 2)).unwrap();
        let p = rhombic_inverse(u, v);
        let product = 4.0 * u.sin() * v.sin() * (u + v).sin();
        prop_assert!((st.value(p).unwrap() - product).abs() < 1e-12);
    }

    #[test]
    fn isosceles_exchange_antisymmetry(m in 1u32..8, n in 1u32..8, a in 0.0f64..PI, b in 0.0f64..PI) {
        prop_assume!(m != n);
        let s = Eigenstate::new(spec(Shape::IsoscelesRight, m, n)).unwrap();
        let t = Eigenstate::new(spec(Shape::IsoscelesRight, n, m)).unwrap();
        prop_assert!((s.amplitude(a, b) + s.amplitude(b, a)).abs() < 1e-12);
        prop_assert!((s.amplitude(a, b) + t.amplitude(a, b)).abs() < 1e-12);
    }

    #[test]
    fn samples_stay_in_the_domain(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for shape in Shape::ALL {
            let d = Domain::new(shape);
            for _ in 0..50 {
                prop_assert!(d.contains(sample_uniform(&d, &mut rng)));
            }
        }
    }
}

#[test]
fn degenerate_labels_are_rejected() {
    assert!(BilliardSpec::new(Shape::IsoscelesRight, 2, 2).is_err());
    assert!(BilliardSpec::new(Shape::Rectangle, 0, 1).is_err());
    assert!(BilliardSpec::new(Shape::Equilateral, 0, 1).is_err());
    assert!(BilliardSpec::new(Shape::Equilateral, 2, 2).is_err());
    assert!(BilliardSpec::new(Shape::Circle, 0, 0).is_err());
    assert!(BilliardSpec::new(Shape::Circle, 0, 1).is_ok());
    assert!(BilliardSpec::with_mode(Shape::Rectangle, 1, 1, Mode::Sin).is_err());
    assert!(BilliardSpec::with_mode(Shape::Equilateral, 1, 2, Mode::NA).is_err());
    // The ground state is symmetric about the altitude, so it has no
    // hemiequilateral counterpart.
    assert!(BilliardSpec::with_mode(Shape::Hemiequilateral, 1, 2, Mode::Cos).is_err());
}

#[test]
fn energies() {
    assert_eq!(energy(&spec(Shape::Rectangle, 3, 2)).unwrap(), 13.0);
    assert_eq!(energy(&spec(Shape::Equilateral, 1, 2)).unwrap(), 3.0);
    assert_eq!(energy(&spec(Shape::IsoscelesRight, 1, 2)).unwrap(), 5.0);
    let z = bessel_j_zero(0, 1).unwrap();
    let e = energy(&spec(Shape::Circle, 0, 1)).unwrap();
    assert!((e - z * z).abs() < 1e-12);
    assert!((e - 5.783185962946784).abs() < 1e-10);
}

#[test]
fn dirichlet_boundary() {
    for s in states() {
        let st = Eigenstate::new(s).unwrap();
        let d = s.domain();
        let mut worst: f64 = 0.0;
        for i in 0..1000 {
            let t = (i as f64 + 0.5) / 1000.0;
            worst = worst.max(st.value(d.boundary_point(t)).unwrap().abs());
        }
        assert!(worst < 1e-10, "{s}: {worst}");
    }
}

#[test]
fn helmholtz_residual_is_second_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in states() {
        let st = Eigenstate::new(s).unwrap();
        let lambda = st.laplacian_eigenvalue();
        let d = s.domain();
        for h in [1e-3, 2e-3] {
            let mut worst: f64 = 0.0;
            for _ in 0..200 {
                let p = sample_uniform(&d, &mut rng);
                let f = |x, y| st.amplitude(x, y);
                let c = f(p.x, p.y);
                let lap = if s.shape == Shape::Box1D {
                    (f(p.x + h, 0.0) + f(p.x - h, 0.0) - 2.0 * c) / (h * h)
                } else {
                    (f(p.x + h, p.y) + f(p.x - h, p.y) + f(p.x, p.y + h) + f(p.x, p.y - h) - 4.0 * c) / (h * h)
                };
                worst = worst.max((lap + lambda * c).abs());
            }
            // Truncation error of the five-point stencil is h^2 (f_xxxx + f_yyyy)/12.
            let bound = h * h * lambda * lambda / 6.0 * 3.0 + 1e-7;
            assert!(worst < bound, "{s} h={h}: residual {worst} > {bound}");
        }
    }
}

#[test]
fn hemiequilateral_vanishes_on_the_altitude() {
    let st = Eigenstate::new(spec(Shape::Hemiequilateral, 1, 3)).unwrap();
    for i in 1..20 {
        let y = i as f64 / 20.0 * SQRT3 * PI / 2.0;
        assert!(st.amplitude(PI / 2.0, y).abs() < 1e-13);
    }
    // Genuinely excited: not the mirror-symmetric ground state.
    assert!((st.laplacian_eigenvalue() - 16.0 / 9.0 * 7.0).abs() < 1e-12);
}

#[test]
fn rectangle_sign_balance() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let n = 200_000;
    for (m, k) in [(2, 1), (3, 2), (2, 2)] {
        let st = Eigenstate::new(spec(Shape::Rectangle, m, k)).unwrap();
        let d = st.spec.domain();
        let pos = (0..n).filter(|_| st.amplitude_at(sample_uniform(&d, &mut rng)) > 0.0).count();
        let frac = pos as f64 / n as f64;
        let sigma = (0.25 / n as f64).sqrt();
        assert!((frac - 0.5).abs() < 3.0 * sigma, "({m},{k}): {frac}");
    }
    let st = Eigenstate::new(spec(Shape::Rectangle, 1, 1)).unwrap();
    let d = st.spec.domain();
    assert!((0..n).all(|_| st.amplitude_at(sample_uniform(&d, &mut rng)) >= 0.0));
}

trait AtPoint {
    fn amplitude_at(&self, p: Point) -> f64;
}

impl AtPoint for Eigenstate {
    fn amplitude_at(&self, p: Point) -> f64 {
        self.amplitude(p.x, p.y)
    }
}

#[test]
fn sampling_is_uniform() {
    let n = 1_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let square = Domain::new(Shape::Rectangle);
    let mut counts = [0u32; 100];
    let mut sum_x = 0.0;
    for _ in 0..n {
        let p = sample_uniform(&square, &mut rng);
        sum_x += p.x;
        let i = ((p.x / PI * 10.0) as usize).min(9);
        let j = ((p.y / PI * 10.0) as usize).min(9);
        counts[10 * i + j] += 1;
    }
    let sd = PI / 12f64.sqrt();
    assert!((sum_x / n as f64 - PI / 2.0).abs() < 3.0 * sd / (n as f64).sqrt());
    let expected = n as f64 / 100.0;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let q99 = ChiSquared::new(99.0).unwrap().inverse_cdf(0.99);
    assert!(chi2 < q99, "{chi2} vs {q99}");

    let disk = Domain::new(Shape::Circle);
    let inner = (0..n)
        .filter(|_| {
            let p = sample_uniform(&disk, &mut rng);
            p.x.hypot(p.y) < PI / 2.0
        })
        .count();
    let frac = inner as f64 / n as f64;
    assert!((frac - 0.25).abs() < 3.0 * (0.1875 / n as f64).sqrt(), "{frac}");
}

#[test]
fn triangle_sampling_matches_centroids() {
    let n = 400_000;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let h = SQRT3 * PI / 2.0;
    let cases = [
        (Shape::IsoscelesRight, (2.0 * PI / 3.0, PI / 3.0)),
        (Shape::Equilateral, (PI / 2.0, h / 3.0)),
        (Shape::Hemiequilateral, (PI / 3.0, h / 3.0)),
    ];
    for (shape, (cx, cy)) in cases {
        let d = Domain::new(shape);
        let (mut sx, mut sy) = (0.0, 0.0);
        for _ in 0..n {
            let p = sample_uniform(&d, &mut rng);
            sx += p.x;
            sy += p.y;
        }
        let tol = 4.0 * PI / (12.0 * n as f64).sqrt();
        assert!((sx / n as f64 - cx).abs() < tol, "{shape} x");
        assert!((sy / n as f64 - cy).abs() < tol, "{shape} y");
    }
}

#[test]
fn domain_areas_match_regions() {
    for shape in Shape::ALL {
        let d = Domain::new(shape);
        if let Some(r) = d.region() {
            assert!((r.area() - d.area()).abs() < 1e-12, "{shape}");
        }
    }
}

#[test]
fn nodal_domains() {
    assert_eq!(nodal_domain_count(&spec(Shape::Rectangle, 3, 2)).unwrap(), 6);
    assert_eq!(nodal_domain_count(&spec(Shape::Rectangle, 1, 1)).unwrap(), 1);
    assert_eq!(nodal_domain_count(&spec(Shape::Rectangle, 3, 3)).unwrap(), 9);
    let e = nodal_domain_count(&spec(Shape::Circle, 1, 1)).unwrap_err();
    assert_eq!(e.kind(), "unsupported_shape");
}

#[test]
fn tiling_classes() {
    let t = tiling_class(&spec(Shape::IsoscelesRight, 2, 6)).unwrap();
    assert!(t.is_tiled);
    assert_eq!(t.d, 2);
    assert_eq!(t.parent, Some(spec(Shape::IsoscelesRight, 1, 3)));

    let t = tiling_class(&spec(Shape::IsoscelesRight, 1, 3)).unwrap();
    assert!(t.is_tiled);
    assert_eq!((t.d, t.parent), (1, None));

    let t = tiling_class(&spec(Shape::IsoscelesRight, 1, 2)).unwrap();
    assert!(!t.is_tiled);
    assert!(tiling_class(&spec(Shape::Rectangle, 1, 2)).is_err());
}

#[test]
fn tiled_state_is_a_scaled_copy() {
    // Psi_{2,6}(x, y) = Psi_{1,3}(2x, 2y) on the sub-triangle with x <= pi/2.
    let child = Eigenstate::new(spec(Shape::IsoscelesRight, 2, 6)).unwrap();
    let parent = Eigenstate::new(spec(Shape::IsoscelesRight, 1, 3)).unwrap();
    for &(x, y) in &[(0.3, 0.1), (1.2, 0.7), (1.5, 1.4)] {
        assert!((child.amplitude(x, y) - parent.amplitude(2.0 * x, 2.0 * y)).abs() < 1e-12);
    }
}
