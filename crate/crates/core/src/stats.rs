//! Small descriptive-statistics helpers shared by the estimators and the
//! experiment harness.

use alloc::vec::Vec;

use crate::math::sqrt;

/// Pairwise (cascade) summation. Result depends only on the slice order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 32;
    if xs.len() <= BLOCK {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    pairwise_sum(xs) / xs.len() as f64
}

/// Divide-by-`len` variance.
pub fn population_variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let sq: Vec<f64> = xs.iter().map(|x| (x - m) * (x - m)).collect();
    pairwise_sum(&sq) / xs.len() as f64
}

/// Divide-by-`len - 1` variance.
pub fn sample_variance(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return f64::NAN;
    }
    population_variance(xs) * xs.len() as f64 / (xs.len() - 1) as f64
}

pub fn sample_covariance(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return f64::NAN;
    }
    let mx = mean(xs);
    let my = mean(ys);
    let prods: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).collect();
    pairwise_sum(&prods) / (xs.len() - 1) as f64
}

/// Pearson correlation; NaN when either side has zero variance.
pub fn pearson_correlation(xs: &[f64], ys: &[f64]) -> f64 {
    let cov = sample_covariance(xs, ys);
    let vx = sample_variance(xs);
    let vy = sample_variance(ys);
    if vx <= 0.0 || vy <= 0.0 {
        return f64::NAN;
    }
    cov / sqrt(vx * vy)
}

/// Quantile of already sorted data, linear interpolation between order
/// statistics (Hyndman–Fan type 7).
pub fn sorted_quantile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let h = (sorted.len() - 1) as f64 * q;
    let lo = crate::math::floor(h) as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Five-number summary (min, quartiles, max), as drawn by a box plot.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FiveNumber {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

impl FiveNumber {
    pub fn of(xs: &[f64]) -> FiveNumber {
        let mut s = xs.to_vec();
        s.sort_by(f64::total_cmp);
        FiveNumber {
            min: s.first().copied().unwrap_or(f64::NAN),
            q1: sorted_quantile(&s, 0.25),
            median: sorted_quantile(&s, 0.5),
            q3: sorted_quantile(&s, 0.75),
            max: s.last().copied().unwrap_or(f64::NAN),
        }
    }
}
