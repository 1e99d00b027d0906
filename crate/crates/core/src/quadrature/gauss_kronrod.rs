//! Globally adaptive 10-point Gauss / 21-point Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::QuadratureResult;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
// Gauss weights for the odd-indexed Kronrod nodes
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// One 21-point Kronrod estimate with the QUADPACK error estimate.
pub fn gk21<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut fv = [(0.0, 0.0); 10];
    let mut k = WGK[10] * fc;
    let mut g = 0.0;
    let mut resabs = WGK[10] * fc.abs();
    for i in 0..10 {
        let dx = h * XGK[i];
        let (f1, f2) = (f(c - dx), f(c + dx));
        fv[i] = (f1, f2);
        k += WGK[i] * (f1 + f2);
        resabs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            g += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * k;
    let mut resasc = WGK[10] * (fc - mean).abs();
    for i in 0..10 {
        resasc += WGK[i] * ((fv[i].0 - mean).abs() + (fv[i].1 - mean).abs());
    }
    let habs = h.abs();
    let resasc = resasc * habs;
    let resabs = resabs * habs;
    let mut err = ((k - g) * h).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (k * h, err)
}

struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Interval {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error)
    }
}

/// Bisects the interval with the largest error until the summed error meets
/// max(abs_tol, rel_tol |I|). The returned state is the one with the smallest
/// total error seen, so tightening the tolerance never increases the estimate.
pub fn gk_adaptive<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_intervals: usize,
) -> QuadratureResult {
    let (v, e) = gk21(f, a, b);
    let mut evaluations = 21;
    let mut heap = BinaryHeap::new();
    heap.push(Interval { a, b, value: v, error: e });
    let mut total = v;
    let mut err = e;
    let mut best = (total, err);
    loop {
        if err <= abs_tol.max(rel_tol * total.abs()) {
            return QuadratureResult { value: total, error_estimate: err, converged: true, evaluations };
        }
        if heap.len() >= max_intervals || !err.is_finite() {
            break;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk21(f, worst.a, mid);
        let (v2, e2) = gk21(f, mid, worst.b);
        evaluations += 42;
        total += v1 + v2 - worst.value;
        err += e1 + e2 - worst.error;
        heap.push(Interval { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Interval { a: mid, b: worst.b, value: v2, error: e2 });
        // re-sum periodically to avoid drift in the running totals
        if heap.len() % 64 == 0 {
            total = heap.iter().map(|i| i.value).sum();
            err = heap.iter().map(|i| i.error).sum();
        }
        if err < best.1 {
            best = (total, err);
        }
    }
    let (value, error_estimate) = if err <= best.1 { (total, err) } else { best };
    QuadratureResult { value, error_estimate, converged: false, evaluations }
}
