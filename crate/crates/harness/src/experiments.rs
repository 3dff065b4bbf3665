//! Monte Carlo experiments. Replicates run in parallel; every replicate draws
//! from its own sub-stream and results are collected in replicate order, so
//! the output does not depend on the thread count.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use degree_mvn_core::gof::{
    anderson_darling_statistic, cdf_scaling, cdf_similarity, pooled_binomial_chisq,
    quantile_residual_breakdown, qq_pairs, reference_df, score_graph, AdNullDistribution,
    BinnedCounts, Category, EmpiricalCdf, GraphScore, MvnCase, ResidualBin,
};
use degree_mvn_core::mle::{estimate_cubic_dependent, estimate_cubic_independent, DegreeData};
use degree_mvn_core::special::{chi_square_upper_quantile, student_t_two_sided_p};
use degree_mvn_core::stats::{mean, pearson_correlation, population_variance, sample_variance, FiveNumber};
use degree_mvn_core::{DistributionRef, GraphEnsembleSpec, SeedSequence};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::Result;

const AD_NULL_KEY: u64 = 0x4144_5f4e_554c_4c00;
const FRESH_SALT: u64 = 0x4652_4553_4800_0000;

/// Seed of the ensemble for cell `(n, p)`. Experiments that look at the same
/// cell under the same root seed see the same graphs.
pub fn cell_seed(root: u64, n: usize, p: f64, salt: u64) -> u64 {
    SeedSequence::new(root).derive(n as u64).derive(p.to_bits()).derive(salt).seed()
}

fn ensemble(cfg: &ExperimentConfig, n: usize, p: f64, salt: u64) -> Result<GraphEnsembleSpec> {
    Ok(GraphEnsembleSpec::new(n, p, cfg.replicates, cell_seed(cfg.seed, n, p, salt))?)
}

/// Anderson–Darling null distributions keyed by `(sample size, reps)`.
///
/// Null statistics depend only on the sample size, so one simulation serves
/// every cell and case with the same number of valid scores.
#[derive(Debug)]
pub struct AdNullCache {
    seeds: SeedSequence,
    reps: usize,
    map: Mutex<HashMap<usize, Arc<AdNullDistribution>>>,
}

impl AdNullCache {
    pub fn new(seed: u64, reps: usize) -> Self {
        Self { seeds: SeedSequence::new(seed).derive(AD_NULL_KEY), reps, map: Mutex::new(HashMap::new()) }
    }

    pub fn for_config(cfg: &ExperimentConfig) -> Self {
        Self::new(cfg.seed, cfg.ad_null_reps)
    }

    pub fn get(&self, size: usize) -> Result<Arc<AdNullDistribution>> {
        if let Some(hit) = self.map.lock().expect("cache lock").get(&size) {
            return Ok(hit.clone());
        }
        let stats: Vec<f64> = (0..self.reps as u64)
            .into_par_iter()
            .map(|k| AdNullDistribution::null_statistic(size, &self.seeds, k))
            .collect();
        let null = Arc::new(AdNullDistribution::from_statistics(size, stats)?);
        Ok(self.map.lock().expect("cache lock").entry(size).or_insert(null).clone())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResultRow {
    pub p: f64,
    pub n: usize,
    pub df: f64,
    pub rejection_proportion: f64,
    pub ad_p_value: f64,
    pub cdf_similarity: f64,
    pub cdf_scaling: f64,
    pub degenerate_count: usize,
}

/// One case of one cell, with the raw scores kept for plot data.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub case: MvnCase,
    pub row: CaseResultRow,
    pub ad_statistic: f64,
    /// Non-degenerate scores in replicate order.
    pub scores: Vec<f64>,
}

/// Per-replicate scores of every case in `cases` on one ensemble.
fn score_ensemble(spec: &GraphEnsembleSpec, cases: &[MvnCase]) -> Result<Vec<Vec<GraphScore>>> {
    let per_rep: Vec<Vec<GraphScore>> = (0..spec.replicates)
        .into_par_iter()
        .map(|r| {
            let g = spec.graph(r);
            cases.iter().map(|&c| score_graph(&g, spec.p, c)).collect::<degree_mvn_core::Result<Vec<_>>>()
        })
        .collect::<degree_mvn_core::Result<_>>()?;
    Ok((0..cases.len()).map(|k| per_rep.iter().map(|s| s[k]).collect()).collect())
}

fn rejection_and_counts(scores: &[GraphScore], critical: f64) -> (Vec<f64>, usize, f64) {
    let valid: Vec<f64> = scores.iter().filter_map(|s| s.value()).collect();
    let degenerate = scores.len() - valid.len();
    let rejected = valid.iter().filter(|&&s| s > critical).count();
    let prop = if valid.is_empty() { f64::NAN } else { rejected as f64 / valid.len() as f64 };
    (valid, degenerate, prop)
}

fn summarize_case(
    n: usize,
    p: f64,
    case: MvnCase,
    scores: &[GraphScore],
    significance: f64,
    nulls: Option<&AdNullCache>,
) -> Result<CaseOutcome> {
    let df = reference_df(n, case.p_mode());
    let critical = chi_square_upper_quantile(significance, df)?;
    let (valid, degenerate_count, rejection_proportion) = rejection_and_counts(scores, critical);
    let (mut ad_statistic, mut ad_p_value, mut similarity, mut scaling) = (f64::NAN, f64::NAN, f64::NAN, f64::NAN);
    if let (Some(nulls), false) = (nulls, valid.is_empty()) {
        let reference = DistributionRef::chi_square(df)?;
        ad_statistic = anderson_darling_statistic(&valid, &reference, true)?;
        ad_p_value = nulls.get(valid.len())?.p_value(ad_statistic);
        let ecdf = EmpiricalCdf::new(&valid)?;
        similarity = cdf_similarity(&ecdf, &reference)?;
        scaling = cdf_scaling(&ecdf, &reference, true)?;
    }
    Ok(CaseOutcome {
        case,
        row: CaseResultRow {
            p,
            n,
            df,
            rejection_proportion,
            ad_p_value,
            cdf_similarity: similarity,
            cdf_scaling: scaling,
            degenerate_count,
        },
        ad_statistic,
        scores: valid,
    })
}

/// Every configured case on the ensemble of cell `(n, p)`, shared across
/// cases unless `fresh_ensembles` is set.
pub fn run_mvn_cell(cfg: &ExperimentConfig, n: usize, p: f64, nulls: &AdNullCache) -> Result<Vec<CaseOutcome>> {
    if cfg.fresh_ensembles {
        return cfg.cases.iter().map(|&case| run_mvn_case(cfg, n, p, case, nulls)).collect();
    }
    let spec = ensemble(cfg, n, p, 0)?;
    let all = score_ensemble(&spec, &cfg.cases)?;
    cfg.cases
        .iter()
        .zip(&all)
        .map(|(&case, scores)| summarize_case(n, p, case, scores, cfg.significance, Some(nulls)))
        .collect()
}

/// A single case. Shares its ensemble with [`run_mvn_cell`] unless
/// `fresh_ensembles` is set, in which case each case has its own.
pub fn run_mvn_case(
    cfg: &ExperimentConfig,
    n: usize,
    p: f64,
    case: MvnCase,
    nulls: &AdNullCache,
) -> Result<CaseOutcome> {
    let salt = if cfg.fresh_ensembles { FRESH_SALT + case.number() as u64 } else { 0 };
    let spec = ensemble(cfg, n, p, salt)?;
    let scores = score_ensemble(&spec, &[case])?.pop().expect("one case requested");
    summarize_case(n, p, case, &scores, cfg.significance, Some(nulls))
}

/// The whole `p` by `n` grid, `p` outermost.
pub fn run_cases(cfg: &ExperimentConfig, nulls: &AdNullCache) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for &p in &cfg.p_values {
        for &n in &cfg.n_values {
            out.extend(run_mvn_cell(cfg, n, p, nulls)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Entry {
    pub case: MvnCase,
    pub df: f64,
    pub rejected_percent: f64,
    pub degenerate_count: usize,
    pub mean_score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Result {
    pub n: usize,
    pub p: f64,
    pub replicates: usize,
    pub entries: Vec<Table1Entry>,
}

impl Table1Result {
    pub fn percent(&self, case: MvnCase) -> Option<f64> {
        self.entries.iter().find(|e| e.case == case).map(|e| e.rejected_percent)
    }
}

/// Rejection percentages of the four cases on one ensemble. Distances and
/// Anderson–Darling p-values are left to the case grid.
pub fn run_table1(cfg: &ExperimentConfig) -> Result<Table1Result> {
    let (n, p) = (cfg.n_values[0], cfg.p_values[0]);
    let spec = ensemble(cfg, n, p, 0)?;
    let all = score_ensemble(&spec, &cfg.cases)?;
    let entries = cfg
        .cases
        .iter()
        .zip(&all)
        .map(|(&case, scores)| {
            let o = summarize_case(n, p, case, scores, cfg.significance, None)?;
            Ok(Table1Entry {
                case,
                df: o.row.df,
                rejected_percent: 100.0 * o.row.rejection_proportion,
                degenerate_count: o.row.degenerate_count,
                mean_score: mean(&o.scores),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Table1Result { n, p, replicates: cfg.replicates, entries })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinomialGofSummary {
    pub n: usize,
    pub p: f64,
    pub replicates: usize,
    pub categories: Vec<Category>,
    pub expected: Vec<f64>,
    pub df: f64,
    pub critical_value: f64,
    pub rejection_fraction: f64,
    pub statistic_mean: f64,
    pub statistic_variance: f64,
    /// Statistics in replicate order.
    pub statistics: Vec<f64>,
    /// Statistics against the quantiles of chi-square with `df`.
    pub residual_bins: Vec<ResidualBin>,
    pub qq: Vec<(f64, f64)>,
}

pub const BINOMIAL_GOF_QUANTILES: usize = 99;

/// Pooled binomial chi-square of every graph in the `(n, p)` ensemble.
pub fn run_binomial_gof_experiment(cfg: &ExperimentConfig) -> Result<BinomialGofSummary> {
    let (n, p) = (cfg.n_values[0], cfg.p_values[0]);
    let spec = ensemble(cfg, n, p, 0)?;
    let reports = (0..spec.replicates)
        .into_par_iter()
        .map(|r| pooled_binomial_chisq(&spec.graph(r), p, cfg.collapse_threshold, cfg.significance))
        .collect::<degree_mvn_core::Result<Vec<_>>>()?;
    let probe = BinnedCounts::from_degrees(&vec![0; n], p, cfg.collapse_threshold)?;
    let df = probe.df();
    let statistics: Vec<f64> = reports.iter().map(|r| r.statistic).collect();
    let rejected = reports.iter().filter(|r| r.reject).count();
    let reference = DistributionRef::chi_square(df)?;
    Ok(BinomialGofSummary {
        n,
        p,
        replicates: spec.replicates,
        categories: probe.categories().to_vec(),
        expected: probe.expected().to_vec(),
        df,
        critical_value: reports[0].critical_value,
        rejection_fraction: rejected as f64 / reports.len() as f64,
        statistic_mean: mean(&statistics),
        statistic_variance: population_variance(&statistics),
        residual_bins: quantile_residual_breakdown(&statistics, &reference, BINOMIAL_GOF_QUANTILES)?,
        qq: qq_pairs(&statistics, &reference)?,
        statistics,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairedTTest {
    pub mean_difference: f64,
    pub sd_difference: f64,
    pub t_statistic: f64,
    pub df: f64,
    pub p_value: f64,
    /// All differences equal; the p-value is reported as 1.
    pub zero_variance: bool,
}

impl PairedTTest {
    /// Two-sided test of zero mean difference, `df = len - 1`.
    pub fn from_pairs(xs: &[f64], ys: &[f64]) -> Result<Self> {
        assert_eq!(xs.len(), ys.len());
        let diffs: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| x - y).collect();
        let df = (diffs.len() - 1) as f64;
        let mean_difference = mean(&diffs);
        let sd_difference = sample_variance(&diffs).sqrt();
        if sd_difference.is_nan() || sd_difference <= 0.0 {
            return Ok(Self { mean_difference, sd_difference, t_statistic: f64::NAN, df, p_value: 1.0, zero_variance: true });
        }
        let t_statistic = mean_difference / (sd_difference / (diffs.len() as f64).sqrt());
        let p_value = student_t_two_sided_p(t_statistic, df)?;
        Ok(Self { mean_difference, sd_difference, t_statistic, df, p_value, zero_variance: false })
    }
}

/// Welch two-sample t-test that ignores the pairing. Reported alongside the
/// paired test as a diagnostic: with strongly correlated estimators it is far
/// less sensitive to a systematic difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WelchTTest {
    pub t_statistic: f64,
    pub df: f64,
    pub p_value: f64,
}

impl WelchTTest {
    pub fn from_samples(xs: &[f64], ys: &[f64]) -> Result<Self> {
        let (nx, ny) = (xs.len() as f64, ys.len() as f64);
        let (vx, vy) = (sample_variance(xs) / nx, sample_variance(ys) / ny);
        let se2 = vx + vy;
        if se2.is_nan() || se2 <= 0.0 {
            return Ok(Self { t_statistic: f64::NAN, df: nx + ny - 2.0, p_value: 1.0 });
        }
        let t_statistic = (mean(xs) - mean(ys)) / se2.sqrt();
        let df = se2 * se2 / (vx * vx / (nx - 1.0) + vy * vy / (ny - 1.0));
        Ok(Self { t_statistic, df, p_value: student_t_two_sided_p(t_statistic, df)? })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimatorComparisonRow {
    pub n: usize,
    pub p: f64,
    pub bias_indep: f64,
    pub bias_dep: f64,
    pub var_indep: f64,
    pub var_dep: f64,
    pub mse_indep: f64,
    pub mse_dep: f64,
    pub paired_t_p_value: f64,
    pub correlation_of_estimates: f64,
}

/// One `(n, p)` cell of the estimator comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorCell {
    pub row: EstimatorComparisonRow,
    pub ttest: PairedTTest,
    pub welch: WelchTTest,
    pub estimates_indep: Vec<f64>,
    pub estimates_dep: Vec<f64>,
    pub box_indep: FiveNumber,
    pub box_dep: FiveNumber,
    /// Replicates where the cubic had no root in (0, 1) and the moment
    /// estimate was used instead.
    pub fallback_indep: usize,
    pub fallback_dep: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorComparison {
    pub cells: Vec<EstimatorCell>,
}

/// `(bias, variance, mse)` with the divide-by-`R` convention, so that
/// `mse = variance + bias^2`.
fn moments(estimates: &[f64], p: f64) -> (f64, f64, f64) {
    let bias = mean(estimates) - p;
    let var = population_variance(estimates);
    let sq: Vec<f64> = estimates.iter().map(|e| (e - p) * (e - p)).collect();
    (bias, var, mean(&sq))
}

/// Both cubic estimators on each degree vector of the `(n, p)` ensemble.
pub fn run_estimator_cell(cfg: &ExperimentConfig, n: usize, p: f64) -> Result<EstimatorCell> {
    let spec = ensemble(cfg, n, p, 0)?;
    let pairs = (0..spec.replicates)
        .into_par_iter()
        .map(|r| {
            let d = DegreeData::from_graph(&spec.graph(r));
            let indep = estimate_cubic_independent(&d);
            let dep = estimate_cubic_dependent(&d)?;
            Ok((indep, dep))
        })
        .collect::<Result<Vec<_>>>()?;
    let estimates_indep: Vec<f64> = pairs.iter().map(|(i, _)| i.p_hat).collect();
    let estimates_dep: Vec<f64> = pairs.iter().map(|(_, d)| d.p_hat).collect();
    let (bias_indep, var_indep, mse_indep) = moments(&estimates_indep, p);
    let (bias_dep, var_dep, mse_dep) = moments(&estimates_dep, p);
    let ttest = PairedTTest::from_pairs(&estimates_indep, &estimates_dep)?;
    Ok(EstimatorCell {
        row: EstimatorComparisonRow {
            n,
            p,
            bias_indep,
            bias_dep,
            var_indep,
            var_dep,
            mse_indep,
            mse_dep,
            paired_t_p_value: ttest.p_value,
            correlation_of_estimates: pearson_correlation(&estimates_indep, &estimates_dep),
        },
        ttest,
        welch: WelchTTest::from_samples(&estimates_indep, &estimates_dep)?,
        box_indep: FiveNumber::of(&estimates_indep),
        box_dep: FiveNumber::of(&estimates_dep),
        fallback_indep: pairs.iter().filter(|(i, _)| !i.converged).count(),
        fallback_dep: pairs.iter().filter(|(_, d)| !d.converged).count(),
        estimates_indep,
        estimates_dep,
    })
}

/// Every `(n, p)` cell, `n` outermost.
pub fn run_estimator_comparison(cfg: &ExperimentConfig) -> Result<EstimatorComparison> {
    let mut cells = Vec::new();
    for &n in &cfg.n_values {
        for &p in &cfg.p_values {
            cells.push(run_estimator_cell(cfg, n, p)?);
        }
    }
    Ok(EstimatorComparison { cells })
}
