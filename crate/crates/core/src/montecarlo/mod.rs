//! Monte Carlo sampling of GUE matrices and empirical estimators.

mod eigen;
mod sampler;

pub use eigen::{hermitian_eigenvalues, EIGEN_TOLERANCE, MAX_SWEEPS};
pub use sampler::{sample_gue, sample_gue_indexed, HermitianSample};

use crate::error::{Error, Result};
use crate::observables::MatrixSize;

/// Smallest sample count accepted by the estimators.
pub const MIN_SAMPLES: usize = 100;

/// Mean and standard error of independent draws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleStats {
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator) over `sqrt(n)`.
    pub std_error: f64,
    pub sample_count: usize,
}

impl SampleStats {
    /// # Panics
    /// On an empty slice.
    pub fn from_values(values: &[f64]) -> Self {
        assert!(!values.is_empty(), "no samples");
        let n = values.len();
        let mean = pairwise_sum(values) / n as f64;
        let std_error = if n > 1 {
            let dev: Vec<f64> = values.iter().map(|v| (v - mean).powi(2)).collect();
            (pairwise_sum(&dev) / (n - 1) as f64 / n as f64).sqrt()
        } else {
            0.0
        };
        Self {
            mean,
            std_error,
            sample_count: n,
        }
    }
}

// Fixed-shape pairwise summation so the result does not depend on threads.
fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 16 {
        values.iter().sum()
    } else {
        let (a, b) = values.split_at(values.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

/// `(mean - reference) / std_error`.
pub fn zscore(est: &SampleStats, reference: f64) -> Result<f64> {
    if est.std_error <= 0.0 {
        return Err(Error::ZeroStdError);
    }
    Ok((est.mean - reference) / est.std_error)
}

/// Real and imaginary parts of the empirical Wilson loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilsonEstimate {
    pub t: f64,
    pub re: SampleStats,
    pub im: SampleStats,
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_SAMPLES} samples, got {samples}"
        )));
    }
    Ok(())
}

/// Eigenvalues of samples `0 .. samples`, in index order.
fn spectra(n: MatrixSize, samples: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    let one = |s: usize| hermitian_eigenvalues(&sample_gue_indexed(n, seed, s as u64), EIGEN_TOLERANCE);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..samples).into_par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..samples).map(one).collect()
    }
}

/// `(1/N) sum_k e^{i t lambda_k}` averaged over `samples` GUE draws.
pub fn estimate_wilson(n: MatrixSize, t: f64, samples: usize, seed: u64) -> Result<WilsonEstimate> {
    Ok(estimate_wilson_grid(n, &[t], samples, seed)?.remove(0))
}

/// [`estimate_wilson`] at several `t` from one set of samples.
pub fn estimate_wilson_grid(n: MatrixSize, ts: &[f64], samples: usize, seed: u64) -> Result<Vec<WilsonEstimate>> {
    check_samples(samples)?;
    let spectra = spectra(n, samples, seed)?;
    let inv_n = 1.0 / n.as_f64();
    Ok(ts
        .iter()
        .map(|&t| {
            let (re, im): (Vec<f64>, Vec<f64>) = spectra
                .iter()
                .map(|eig| {
                    let (s, c) = eig
                        .iter()
                        .fold((0.0, 0.0), |(s, c), &x| (s + (t * x).sin(), c + (t * x).cos()));
                    (c * inv_n, s * inv_n)
                })
                .unzip();
            WilsonEstimate {
                t,
                re: SampleStats::from_values(&re),
                im: SampleStats::from_values(&im),
            }
        })
        .collect())
}

/// One histogram bin `[lo, hi)`; its stats estimate the mean density there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub stats: SampleStats,
}

/// Eigenvalue histogram normalized to a density: each sample contributes
/// `count / (N * width)` per bin, so the bin means sum to the fraction of
/// eigenvalues inside `[lambda_min, lambda_max)` divided by the width.
pub fn estimate_density_histogram(
    n: MatrixSize,
    samples: usize,
    bins: usize,
    range: (f64, f64),
    seed: u64,
) -> Result<Vec<HistogramBin>> {
    check_samples(samples)?;
    let (lo, hi) = range;
    if bins < 10 {
        return Err(Error::InvalidArgument(format!("need at least 10 bins, got {bins}")));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidArgument(format!("empty range [{lo}, {hi}]")));
    }
    let width = (hi - lo) / bins as f64;
    let scale = 1.0 / (n.as_f64() * width);
    let spectra = spectra(n, samples, seed)?;
    let mut per_bin = vec![vec![0.0; samples]; bins];
    for (s, eig) in spectra.iter().enumerate() {
        for &x in eig {
            if x >= lo && x < hi {
                let k = (((x - lo) / width) as usize).min(bins - 1);
                per_bin[k][s] += scale;
            }
        }
    }
    Ok(per_bin
        .iter()
        .enumerate()
        .map(|(k, values)| HistogramBin {
            lo: lo + k as f64 * width,
            hi: lo + (k + 1) as f64 * width,
            stats: SampleStats::from_values(values),
        })
        .collect())
}
