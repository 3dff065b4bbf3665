//! Algorithmic core for studying the joint node degree distribution of
//! Erdős–Rényi `G(n, p)` graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It covers graph sampling,
//! the closed-form algebra of constant-diagonal/constant-off-diagonal
//! covariance matrices, the special functions behind the reference
//! distributions, every goodness-of-fit statistic used by the experiments
//! and the moment / likelihood estimators of the edge probability.
//!
//! IO, parallel orchestration and the CLI live in the `degree-mvn` crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]
// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod error;
mod math;

pub mod gof;
pub mod graph;
pub mod mle;
pub mod rng;
pub mod special;
pub mod stats;
pub mod structured_cov;

pub use error::{Error, Result};
pub use gof::{
    anderson_darling, anderson_darling_statistic, binned_chisq, binomial_binning, cdf_scaling,
    cdf_similarity, mahalanobis_score, pooled_binomial_chisq, qq_pairs,
    quantile_residual_breakdown, reference_df, score_graph, AdNullDistribution, AdOptions,
    AdOutcome, BinnedCounts, Category, EmpiricalCdf, GofReport, GraphScore, MvnCase, PMode,
    ResidualBin,
};
pub use graph::{degree_pair_samples, estimate_p, generate_graph, Graph, GraphEnsembleSpec};
pub use mle::{
    cubic_dependent_coefficients, cubic_independent_coefficients, estimate_cubic_dependent,
    estimate_cubic_independent, moment_estimate, numeric_mle, solve_cubic_in_unit_interval, Cubic,
    DegreeData, EstimateMethod, EstimateResult,
};
pub use rng::{SeedSequence, StreamDomain, StreamRng};
pub use special::DistributionRef;
pub use structured_cov::{theoretical_correlation, Dependence, InverseCoefficients, MvnModel, StructuredMatrix};
