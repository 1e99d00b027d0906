//! Special functions against independent oracles: quadrature of defining
//! integrals, periodic trapezoid sums, a residue series for the Meijer G
//! function, and reference values from a 30-digit arbitrary-precision
//! evaluation (mpmath).

use ampdist::quadrature::{integrate_1d, integrate_1d_with, Method, Options1d};
use ampdist::specialfn::*;
use ampdist::Error;
use std::f64::consts::{FRAC_PI_2, PI};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// J_n(x) = (1/2pi) int_0^{2pi} cos(n t - x sin t) dt; the trapezoid rule is
/// exact to rounding once the number of nodes exceeds x + n + 40.
fn bessel_trapezoid(n: u32, x: f64) -> f64 {
    let m = (x + n as f64 + 64.0).ceil() as usize * 2;
    let h = 2.0 * PI / m as f64;
    (0..m).map(|i| (n as f64 * i as f64 * h - x * (i as f64 * h).sin()).cos()).sum::<f64>() / m as f64
}

#[test]
fn gamma_matches_euler_integral() {
    let x = 7.0 / 6.0;
    let head = integrate_1d(|t: f64| t.powf(x - 1.0) * (-t).exp(), 0.0, 1.0, 1e-15).unwrap();
    let tail = integrate_1d(|t: f64| t.powf(x - 1.0) * (-t).exp(), 1.0, 50.0, 1e-15).unwrap();
    let oracle = head.value + tail.value;
    assert!(rel(gamma(x).unwrap(), oracle) < 1e-13);
    assert!(rel(gamma(x).unwrap(), 0.927_719_333_630_039_2) < 1e-13);
}

#[test]
fn gamma_reference_values_and_poles() {
    assert!(rel(gamma(-2.0 / 3.0).unwrap(), -4.018_407_802_061_621_5) < 1e-13);
    let g = gamma(170.5).unwrap();
    assert!(rel(g, 5.562_092_414_559_999_6e305) < 1e-12, "{g:e} rel {}", rel(g, 5.562_092_414_559_999_6e305));
    for n in [0.0, -1.0, -7.0] {
        assert!(matches!(gamma(n), Err(Error::Pole { .. })));
    }
}

#[test]
fn bessel_integer_orders_match_trapezoid_oracle() {
    for n in [0u32, 1, 2, 5, 13, 20, 37, 60] {
        for i in 0..=80 {
            let x = 0.05 + i as f64 * 2.5;
            let v = bessel_j(n as f64, x).unwrap();
            let o = bessel_trapezoid(n, x);
            assert!((v - o).abs() <= 1e-10 * o.abs() + 2e-15, "J_{n}({x}) = {v}, oracle {o}");
        }
    }
}

#[test]
fn bessel_reference_values() {
    let cases = [
        (0.0, 1.0, 0.765_197_686_557_966_55),
        (0.0, 50.0, 0.055_812_327_669_251_815),
        (1.0, 7.5, 0.135_248_427_579_705_51),
        (2.5, 10.3, 0.231_861_613_677_290_87),
        (20.0, 50.0, -0.116_704_352_759_579_74),
        (20.0, 15.0, 0.007_360_234_079_223_485_3),
        (60.0, 200.0, 0.034_156_500_001_271_93),
        (60.0, 30.0, 9.807_557_643_128_625e-14),
        (0.5, 0.1, 0.251_892_940_326_000_95),
        (7.0, 300.0, 0.034_446_946_196_176_049),
        (0.0, 1000.5, 0.019_486_559_987_130_137),
    ];
    for (nu, x, want) in cases {
        let v = bessel_j(nu, x).unwrap();
        assert!(rel(v, want) < 1e-10, "J_{nu}({x}) = {v}, want {want}");
    }
}

#[test]
fn half_integer_order_is_elementary() {
    // J_{1/2}(x) = sqrt(2/(pi x)) sin x
    for i in 1..100 {
        let x = i as f64 * 1.7;
        let v = bessel_j(0.5, x).unwrap();
        let o = (2.0 / (PI * x)).sqrt() * x.sin();
        assert!((v - o).abs() < 1e-12, "x={x}");
    }
}

#[test]
fn bessel_zeros() {
    let cases = [
        (0, 1, 2.404_825_557_695_772_8),
        (0, 2, 5.520_078_110_286_310_6),
        (1, 1, 3.831_705_970_207_512_3),
        (5, 3, 15.700_174_079_711_671),
        (20, 10, 58.602_022_073_846_72),
        (60, 1, 67.528_785_765_029_45),
    ];
    for (m, n, want) in cases {
        let z = bessel_j_zero(m, n).unwrap();
        assert!(rel(z, want) < 1e-13, "j_{m},{n} = {z}, want {want}");
    }
    assert!(bessel_j_zero(0, 0).is_err());
}

#[test]
fn zero_f_one_reproduces_j0() {
    let policy = SeriesPolicy::default();
    for i in 0..=100 {
        let x = i as f64 * 0.5;
        let f = hyp_pfq(&[], &[1.0], -x * x / 4.0, &policy).unwrap();
        let j = bessel_j(0.0, x).unwrap();
        assert!((f - j).abs() <= 1e-10 * j.abs().max(1e-2), "x={x}: {f} vs {j}");
    }
}

#[test]
fn struve_matches_integral_representation() {
    // H0(x) = (2/pi) int_0^{pi/2} sin(x cos t) dt
    for i in 0..=200 {
        let x = -100.0 + i as f64;
        let opts = Options1d { abs_tol: 1e-15, rel_tol: 1e-14, ..Default::default() };
        let o = 2.0 / PI * integrate_1d_with(|t: f64| (x * t.cos()).sin(), 0.0, FRAC_PI_2, &opts).unwrap().value;
        let v = struve_h0(x).unwrap();
        assert!((v - o).abs() <= 1e-9 * o.abs().max(1e-2), "x={x}: {v} vs {o}");
    }
}

#[test]
fn struve_reference_values_across_crossover() {
    let cases = [
        (1.0, 0.568_656_627_048_287_95),
        (5.0, -0.185_216_815_776_684_89),
        (19.9, 0.077_673_986_408_811_386),
        (20.0, 0.094_393_698_081_323_451),
        (20.1, 0.110_406_471_648_242_07),
        (50.0, -0.085_337_674_826_118_999),
        (100.0, -0.070_878_751_689_647_343),
        (500.0, 0.011_779_943_191_791_686),
    ];
    for (x, want) in cases {
        let v = struve_h0(x).unwrap();
        assert!(rel(v, want) < 1e-9, "H0({x}) = {v}, want {want}");
        assert_eq!(struve_h0(-x).unwrap(), -v);
    }
}

#[test]
fn elliptic_k_matches_quadrature() {
    for i in 0..=99 {
        let m = i as f64 / 100.0;
        let o = integrate_1d(|t: f64| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 1e-15).unwrap();
        let v = elliptic_k(m).unwrap();
        assert!(rel(v, o.value) < 2e-14, "K({m}) = {v}, oracle {}", o.value);
    }
    assert!(rel(elliptic_k(0.75).unwrap(), 2.156_515_647_499_643_2) < 1e-14);
    assert!(rel(elliptic_k_complement(1e-12).unwrap(), 15.201_804_919_087_715) < 1e-14);
    assert!(matches!(elliptic_k(1.0), Err(Error::Domain { .. })));
    assert!(matches!(elliptic_k(-0.5), Err(Error::Domain { .. })));
}

#[test]
fn hyp2f1_reference_values() {
    let t = 1.0 / 3.0;
    let cases = [
        (t, t, 2.0 * t, 0.5, 1.117_988_281_894_856),
        (2.0 * t, 2.0 * t, t, 4.0 / 27.0, 1.233_406_919_690_744_2),
        (2.0 * t, 2.0 * t, t, 0.999, 1_459.473_926_681_874_4),
        (-t, 2.0 * t, t, 0.9, -0.334_739_014_822_626_97),
        (t, t, 2.0 * t, 0.9999, 2.701_946_709_281_939_7),
        (0.3, 1.7, 2.2, 0.8, 1.390_011_898_570_056_3),
        (0.5, 0.5, 1.0, 0.99, 2.352_715_816_779_742_3),
    ];
    for (a, b, c, z, want) in cases {
        let v = hyp2f1(a, b, c, z).unwrap();
        assert!(rel(v, want) < 1e-10, "2F1({a},{b};{c};{z}) = {v}, want {want}");
    }
    // 2F1(1/2, 1/2; 1; m) = (2/pi) K(m)
    for i in 0..99 {
        let m = i as f64 / 100.0;
        let v = hyp2f1(0.5, 0.5, 1.0, m).unwrap();
        assert!(rel(v, 2.0 / PI * elliptic_k(m).unwrap()) < 1e-12, "m={m}");
    }
}

#[test]
fn hyp_pfq_large_argument_reference_values() {
    let t = 1.0 / 3.0;
    let p = SeriesPolicy::default();
    let cases: [(&[f64], &[f64], f64, f64); 5] = [
        (&[0.25, 0.5, 0.75], &[t, 2.0 * t, 1.0, 1.0], -16.0 * 300.0f64.powi(2) / 27.0, 0.019_686_050_542_462_888),
        (&[0.75, 1.0, 1.0, 1.25], &[5.0 / 6.0, 7.0 / 6.0, 1.5, 1.5, 1.5], -16.0 * 1e4 / 27.0, 8.086_016_511_659_03e-4),
        (&[t, 2.0 * t], &[0.5, 1.0, 1.0], -27.0 * 1e4 / 16.0, 0.015_200_315_526_116_832),
        (&[1.0, 1.0], &[1.5, 1.5, 1.5], -200.0f64.powi(2) / 4.0, 1.624_984_107_198_399_7e-4),
        (&[0.05], &[1.0, 1.05], -1e6, 0.473_030_379_157_743_2),
    ];
    for (a, b, z, want) in cases {
        let v = hyp_pfq_eval(a, b, z, &p).unwrap();
        assert!(rel(v.value, want) < 1e-9, "pFq({a:?};{b:?};{z}) = {:?}, want {want}", v);
        assert!(v.precision_bits > 53, "cancellation should raise the precision");
    }
    assert!(rel(hyp0f1(1.0, -25.0).unwrap(), -0.245_935_764_451_348_34) < 1e-12);
}

#[test]
fn hyp_pfq_reports_nonconvergence_instead_of_truncating() {
    let tight = SeriesPolicy { max_terms: 20, ..SeriesPolicy::default() };
    assert!(matches!(hyp_pfq(&[0.5], &[1.5], -400.0, &tight), Err(Error::NonConvergence { .. })));
}

#[test]
fn meijer_reference_values() {
    let cases = [
        (0.016_875_000_000_000_002, 2.730_711_244_819_699_4),
        (0.105_468_75, 1.797_874_867_049_776),
        (0.421_875, 1.267_819_403_162_059_3),
        (0.949_218_75, 1.014_917_317_324_233),
        (1e-10, 204.402_201_910_734_06),
        (0.999, 1.000_284_893_655_308_9),
        (0.999_999, 1.000_000_284_722_393_5),
    ];
    for (z, want) in cases {
        let v = meijer_g_4044(z).unwrap();
        assert!(rel(v, want) < 1e-6, "G({z}) = {v}, want {want}");
    }
}

/// Residue series of G^{4,0}_{4,4}: simple poles at s = -1/4 + k and
/// s = 1/4 + k, a double pole at s = k.
fn meijer_residue_series(z: f64) -> f64 {
    let a = [-1.0 / 6.0, 1.0 / 6.0, 0.5, 0.5];
    let lz = z.ln();
    // ln|Gamma| with its sign
    let lg = |x: f64| -> (f64, f64) {
        let s = if x > 0.0 || (x.floor() as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        (ln_gamma_abs(x).unwrap(), s)
    };
    let mut sum = 0.0;
    for k in 0..4000 {
        let kf = k as f64;
        let mut term_total = 0.0;
        // simple poles from Gamma(b - s) with b = -1/4 and b = 1/4
        for (b, others) in [(-0.25, [0.25, 0.0, 0.0]), (0.25, [-0.25, 0.0, 0.0])] {
            let s = b + kf;
            let mut ln = kf * 0.0 + s * lz - statrs_ln_factorial(k);
            let mut sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            for o in others {
                let (l, sg) = lg(o - s);
                ln += l;
                sign *= sg;
            }
            for aj in a {
                let (l, sg) = lg(aj - s);
                ln -= l;
                sign *= sg;
            }
            term_total += sign * ln.exp();
        }
        // double pole at s = k from Gamma(-s)^2
        let s = kf;
        let mut ln = s * lz - 2.0 * statrs_ln_factorial(k);
        let mut sign = 1.0;
        let mut dlog = 0.0;
        for b in [-0.25, 0.25] {
            let (l, sg) = lg(b - s);
            ln += l;
            sign *= sg;
            dlog -= digamma(b - s).unwrap();
        }
        for aj in a {
            let (l, sg) = lg(aj - s);
            ln -= l;
            sign *= sg;
            dlog += digamma(aj - s).unwrap();
        }
        let psi = digamma(kf + 1.0).unwrap();
        term_total += sign * ln.exp() * (2.0 * psi - dlog - lz);
        sum += term_total;
        if k > 10 && term_total.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn statrs_ln_factorial(k: usize) -> f64 {
    ln_gamma_abs(k as f64 + 1.0).unwrap()
}

#[test]
fn meijer_contour_agrees_with_residue_series_on_log_grid() {
    for i in 0..50 {
        let z = 10f64.powf(-8.0 + 8.0 * i as f64 / 49.0) * 0.9;
        let series = meijer_residue_series(z);
        let contour = meijer_g_4044(z).unwrap();
        assert!(rel(contour, series) < 1e-8, "z={z}: contour {contour}, series {series}");
    }
}

#[test]
fn meijer_mellin_moments() {
    // int_0^1 z^{s-1} G(z) dz = prod Gamma(b_j + s) / prod Gamma(a_j + s)
    let a = [-1.0 / 6.0, 1.0 / 6.0, 0.5, 0.5];
    let b = [-0.25, 0.0, 0.0, 0.25];
    for s in [1.0, 2.0] {
        let want = b.iter().map(|&x| gamma(x + s).unwrap()).product::<f64>()
            / a.iter().map(|&x| gamma(x + s).unwrap()).product::<f64>();
        let opts = Options1d { abs_tol: 1e-9, rel_tol: 1e-9, method: Method::TanhSinh, ..Default::default() };
        let g = |z: f64| if z > 0.0 && z < 1.0 { z.powf(s - 1.0) * meijer_g_4044(z).unwrap() } else { 0.0 };
        let got = integrate_1d_with(g, 0.0, 1.0, &opts).unwrap();
        assert!(rel(got.value, want) < 1e-6, "s={s}: {} vs {want}", got.value);
    }
}

#[test]
fn incomplete_beta() {
    for (z, a, b) in [(0.5, 0.3, 0.5), (0.9, 0.3, 0.5), (0.2, 2.5, 1.5), (0.75, 1.2, 3.0)] {
        let o = integrate_1d(|t: f64| t.powf(a - 1.0) * (1.0 - t).powf(b - 1.0), 0.0, z, 1e-14).unwrap();
        assert!(rel(inc_beta(z, a, b).unwrap(), o.value) < 1e-8, "B_{z}({a},{b})");
    }
    assert!(rel(inc_beta(0.5, 0.3, 0.5).unwrap(), 2.911_607_435_680_857) < 1e-8);
    assert!(rel(inc_beta(0.9, 0.3, 0.5).unwrap(), 3.906_425_483_190_536_6) < 1e-8);
    // continuation to negative a
    assert!(rel(inc_beta(0.3, -0.3, 0.5).unwrap(), -4.441_883_873_388_598_5) < 1e-8);
    assert!(rel(inc_beta(0.95, -0.3, 0.5).unwrap(), -2.127_781_606_642_626_4) < 1e-8);
    assert!(matches!(inc_beta(0.5, -1.0, 0.5), Err(Error::Pole { .. })));
}
