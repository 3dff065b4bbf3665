use alloc::vec::Vec;

use crate::graph::Graph;
use crate::special::{binomial_pmf, chi_square_quantile, chi_square_sf};
use crate::{Error, Result};

use super::GofReport;

/// Inclusive degree range `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Category {
    pub lo: u32,
    pub hi: u32,
}

impl Category {
    pub fn contains(&self, degree: u32) -> bool {
        (self.lo..=self.hi).contains(&degree)
    }
}

/// Observed and expected category counts of a binned chi-square test.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BinnedCounts {
    categories: Vec<Category>,
    observed: Vec<u64>,
    expected: Vec<f64>,
    df: f64,
}

impl BinnedCounts {
    /// `df = categories - constraints - estimated_params`.
    pub fn new(
        categories: Vec<Category>,
        observed: Vec<u64>,
        expected: Vec<f64>,
        constraints: usize,
        estimated_params: usize,
    ) -> Result<Self> {
        let k = categories.len();
        if observed.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: observed.len() });
        }
        if expected.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: expected.len() });
        }
        if k < 2 || k <= constraints + estimated_params {
            return Err(Error::DegenerateBinning { categories: k });
        }
        if expected.iter().any(|e| !(*e > 0.0)) {
            return Err(Error::InvalidParameter("expected counts must be positive"));
        }
        let total_obs: u64 = observed.iter().sum();
        let total_exp: f64 = expected.iter().sum();
        if constraints > 0 && (total_exp - total_obs as f64).abs() > 1e-9 * (total_obs as f64).max(1.0) {
            return Err(Error::InvalidParameter("expected counts must sum to the observed total"));
        }
        let df = (k - constraints - estimated_params) as f64;
        Ok(Self { categories, observed, expected, df })
    }

    /// Counts the degrees of `g` into the collapsed binomial categories.
    pub fn from_degrees(degrees: &[u32], p: f64, collapse_threshold: f64) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(Error::InvalidParameter("need at least two nodes"));
        }
        let (categories, expected) = binomial_binning(degrees.len(), p, collapse_threshold)?;
        let mut per_degree = alloc::vec![0u64; degrees.len()];
        for &d in degrees {
            let slot = per_degree
                .get_mut(d as usize)
                .ok_or(Error::InvalidParameter("degree exceeds n - 1"))?;
            *slot += 1;
        }
        let observed = categories
            .iter()
            .map(|c| per_degree[c.lo as usize..=c.hi as usize].iter().sum())
            .collect();
        Self::new(categories, observed, expected, 1, 0)
    }

    pub fn categories(&self) -> &[Category] {
        &self.categories
    }

    pub fn observed(&self) -> &[u64] {
        &self.observed
    }

    pub fn expected(&self) -> &[f64] {
        &self.expected
    }

    pub fn df(&self) -> f64 {
        self.df
    }

    /// `(O_i - E_i)^2 / E_i` per category.
    pub fn residuals(&self) -> Vec<f64> {
        self.observed
            .iter()
            .zip(&self.expected)
            .map(|(&o, &e)| {
                let diff = o as f64 - e;
                diff * diff / e
            })
            .collect()
    }
}

/// Binomial(n - 1, p) degree categories for an `n`-node graph, with the
/// tails pooled inward until every expected count reaches the threshold.
///
/// Only the two tails are merged. Expected counts are `n * pmf(k)`.
pub fn binomial_binning(n: usize, p: f64, collapse_threshold: f64) -> Result<(Vec<Category>, Vec<f64>)> {
    if n < 2 {
        return Err(Error::InvalidParameter("need at least two nodes"));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter("p must lie strictly inside (0, 1)"));
    }
    if !(collapse_threshold >= 0.0) {
        return Err(Error::InvalidParameter("collapse threshold must be non-negative"));
    }
    let trials = (n - 1) as u64;
    let expected: Vec<f64> = (0..=trials)
        .map(|k| binomial_pmf(k, trials, p).map(|f| f * n as f64))
        .collect::<Result<_>>()?;
    let last = expected.len() - 1;

    let mut lo = 0usize;
    let mut lo_mass = expected[0];
    while lo_mass < collapse_threshold && lo < last {
        lo += 1;
        lo_mass += expected[lo];
    }
    let mut hi = last;
    let mut hi_mass = expected[last];
    while hi_mass < collapse_threshold && hi > lo + 1 {
        hi -= 1;
        hi_mass += expected[hi];
    }
    if hi <= lo || hi_mass < collapse_threshold {
        return Err(Error::DegenerateBinning { categories: 1 });
    }

    let mut categories = Vec::with_capacity(hi - lo + 1);
    let mut counts = Vec::with_capacity(hi - lo + 1);
    categories.push(Category { lo: 0, hi: lo as u32 });
    counts.push(lo_mass);
    for (k, &e) in expected.iter().enumerate().take(hi).skip(lo + 1) {
        categories.push(Category { lo: k as u32, hi: k as u32 });
        counts.push(e);
    }
    categories.push(Category { lo: hi as u32, hi: last as u32 });
    counts.push(hi_mass);
    // renormalise the pooled masses so the one sum constraint holds exactly
    let total: f64 = counts.iter().sum();
    let scale = n as f64 / total;
    for c in &mut counts {
        *c *= scale;
    }
    Ok((categories, counts))
}

/// Pearson chi-square of binned counts against `chi^2_df`.
pub fn binned_chisq(counts: &BinnedCounts, significance: f64) -> Result<GofReport> {
    if !(significance > 0.0 && significance < 1.0) {
        return Err(Error::InvalidParameter("significance must lie in (0, 1)"));
    }
    let residuals = counts.residuals();
    let statistic: f64 = residuals.iter().sum();
    let critical_value = chi_square_quantile(1.0 - significance, counts.df)?;
    Ok(GofReport {
        statistic,
        df: counts.df,
        critical_value,
        p_value: chi_square_sf(statistic, counts.df)?,
        reject: statistic > critical_value,
        residuals: Some(residuals),
    })
}

/// Tests whether the degrees of one graph look like `n` draws from
/// Binomial(n - 1, p).
pub fn pooled_binomial_chisq(
    g: &Graph,
    p: f64,
    collapse_threshold: f64,
    significance: f64,
) -> Result<GofReport> {
    let counts = BinnedCounts::from_degrees(g.degrees(), p, collapse_threshold)?;
    binned_chisq(&counts, significance)
}
