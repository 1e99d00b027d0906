//! Monte Carlo sampling of eigenfunction amplitudes and the statistics used
//! to compare samples with densities: empirical distributions, one- and
//! two-sample Kolmogorov-Smirnov tests and Pearson chi-square.
//!
//! Sampling splits the requested count into fixed-size chunks, each drawn
//! from its own ChaCha8 stream of the master seed, and sorts the result, so
//! the output depends only on (spec, N, seed) and not on the thread count.

mod cdf;
mod chisq;
mod ks;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::billiards::{sample_uniform, BilliardSpec, Eigenstate};
use crate::distributions::DistributionForm;
use crate::error::{Error, Result};

pub use cdf::CdfTable;
pub use chisq::{chi_square, chi_square_two_sample, ChiSquare, MIN_EXPECTED};
pub use ks::{ks_critical_value, ks_statistic, ks_statistic_sorted, ks_two_sample, ks_two_sample_critical_value};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_BINS: usize = 200;
/// Points drawn per random stream.
pub const CHUNK_SIZE: usize = 65_536;

/// Sorted amplitudes at `n` uniform points of the domain.
pub fn sample_raw(spec: &BilliardSpec, n: usize, seed: u64) -> Result<Vec<f64>> {
    let state = Eigenstate::new(*spec)?;
    let domain = spec.domain();
    let chunks = n.div_ceil(CHUNK_SIZE);
    let mut out: Vec<f64> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let len = CHUNK_SIZE.min(n - c * CHUNK_SIZE);
            let state = &state;
            (0..len)
                .map(|_| {
                    let p = sample_uniform(&domain, &mut rng);
                    state.amplitude(p.x, p.y)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.par_sort_unstable_by(f64::total_cmp);
    Ok(out)
}

/// Histogram of sampled amplitudes, keeping the sorted samples for
/// tests that need the empirical distribution function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalDistribution {
    pub samples_count: usize,
    pub bin_edges: Vec<f64>,
    pub bin_masses: Vec<f64>,
    pub seed: u64,
    pub spec: BilliardSpec,
    #[serde(skip)]
    samples: Vec<f64>,
}

/// `n` samples binned into `DEFAULT_BINS` equal bins. The bins span the
/// range where the closed-form density is nonzero, or the observed range
/// for states without a closed form and for the disk, whose model support
/// is far wider than the eigenfunction's range.
pub fn sample_amplitudes(spec: &BilliardSpec, n: usize, seed: u64) -> Result<EmpiricalDistribution> {
    sample_amplitudes_with_bins(spec, n, seed, DEFAULT_BINS)
}

pub fn sample_amplitudes_with_bins(
    spec: &BilliardSpec,
    n: usize,
    seed: u64,
    bins: usize,
) -> Result<EmpiricalDistribution> {
    if n == 0 || bins == 0 {
        return Err(Error::InvalidArgument("sample and bin counts must be at least 1".into()));
    }
    let form = DistributionForm::new(spec)?;
    let samples = sample_raw(spec, n, seed)?;
    let (lo, hi) = match form.family {
        crate::distributions::Family::NumericOnly | crate::distributions::Family::CircleAsymptotic => {
            let (a, b) = (samples[0], samples[n - 1]);
            if b > a {
                (a, b)
            } else {
                (a - 0.5, a + 0.5)
            }
        }
        _ => form.density_range(),
    };
    EmpiricalDistribution::from_sorted(*spec, seed, samples, lo, hi, bins)
}

impl EmpiricalDistribution {
    /// Bins already sorted samples into `bins` equal bins on [lo, hi].
    /// Samples outside the range are counted in no bin, so the masses then
    /// sum to less than one.
    pub fn from_sorted(
        spec: BilliardSpec,
        seed: u64,
        samples: Vec<f64>,
        lo: f64,
        hi: f64,
        bins: usize,
    ) -> Result<Self> {
        if !(hi > lo) || bins == 0 || samples.is_empty() {
            return Err(Error::InvalidArgument(format!("cannot bin {} samples on [{lo}, {hi}]", samples.len())));
        }
        let width = (hi - lo) / bins as f64;
        let mut bin_edges: Vec<f64> = (0..=bins).map(|i| lo + width * i as f64).collect();
        bin_edges[bins] = hi;
        let mut counts = vec![0u64; bins];
        for &s in &samples {
            if s < lo || s > hi {
                continue;
            }
            let i = (((s - lo) / width) as usize).min(bins - 1);
            counts[i] += 1;
        }
        let n = samples.len() as f64;
        let bin_masses = counts.iter().map(|&c| c as f64 / n).collect();
        Ok(EmpiricalDistribution { samples_count: samples.len(), bin_edges, bin_masses, seed, spec, samples })
    }

    /// Sorted raw samples.
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn bin_count(&self) -> usize {
        self.bin_masses.len()
    }

    /// Histogram estimate of the density in bin i.
    pub fn bin_density(&self, i: usize) -> f64 {
        self.bin_masses[i] / (self.bin_edges[i + 1] - self.bin_edges[i])
    }

    /// Standard error of `bin_density(i)`, from the binomial variance.
    pub fn bin_density_error(&self, i: usize) -> f64 {
        let p = self.bin_masses[i];
        (p * (1.0 - p) / self.samples_count as f64).sqrt() / (self.bin_edges[i + 1] - self.bin_edges[i])
    }

    /// Fraction of samples at or below x.
    pub fn ecdf(&self, x: f64) -> f64 {
        self.samples.partition_point(|&s| s <= x) as f64 / self.samples_count as f64
    }

    /// Sample mean of Psi^k and its standard error.
    pub fn moment(&self, k: i32) -> (f64, f64) {
        let n = self.samples_count as f64;
        let mean = self.samples.iter().map(|s| s.powi(k)).sum::<f64>() / n;
        let var = self.samples.iter().map(|s| (s.powi(k) - mean).powi(2)).sum::<f64>() / (n - 1.0).max(1.0);
        (mean, (var / n).sqrt())
    }

    /// Fraction of positive minus fraction of negative samples, with its
    /// standard error.
    pub fn sign_imbalance(&self) -> (f64, f64) {
        let n = self.samples_count as f64;
        let neg = self.samples.partition_point(|&s| s < 0.0);
        let pos = self.samples_count - self.samples.partition_point(|&s| s <= 0.0);
        let d = (pos as f64 - neg as f64) / n;
        let nonzero = (pos + neg) as f64 / n;
        (d, ((nonzero - d * d) / n).sqrt())
    }
}
