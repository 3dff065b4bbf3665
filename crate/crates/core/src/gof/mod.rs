//! Goodness-of-fit statistics.
//!
//! * [`binned`]: pooled binomial chi-square on the degree counts of one graph.
//! * [`mvn`]: Mahalanobis score of a degree vector under the MVN model.
//! * [`ecdf`]: Anderson–Darling, ECDF distances, qq pairs and quantile
//!   residual breakdowns of a sample of scores against a reference.

use alloc::vec::Vec;

pub mod binned;
pub mod ecdf;
pub mod mvn;

pub use binned::{binned_chisq, binomial_binning, pooled_binomial_chisq, BinnedCounts, Category};
pub use ecdf::{
    anderson_darling, anderson_darling_statistic, cdf_scaling, cdf_similarity, qq_pairs,
    quantile_residual_breakdown, AdNullDistribution, AdOptions, AdOutcome, EmpiricalCdf,
    ResidualBin,
};
pub use mvn::{mahalanobis_score, reference_df, score_graph, GraphScore, MvnCase, PMode};

/// Outcome of a single hypothesis test.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GofReport {
    pub statistic: f64,
    pub df: f64,
    pub critical_value: f64,
    pub p_value: f64,
    /// `statistic > critical_value`.
    pub reject: bool,
    pub residuals: Option<Vec<f64>>,
}
