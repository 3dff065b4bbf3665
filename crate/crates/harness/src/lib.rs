//! Experiment harness for the joint degree distribution of `G(n, p)`.
//!
//! Everything that touches threads, files or the command line lives here;
//! the algorithms are in [`degree_mvn_core`].

pub mod config;
pub mod edgelist;
pub mod error;
pub mod experiments;
pub mod format;
pub mod output;

pub use config::{ExperimentConfig, ExperimentKind, Overrides};
pub use error::{HarnessError, Result};
pub use experiments::{
    run_binomial_gof_experiment, run_estimator_comparison, run_mvn_case, run_mvn_cell,
    run_table1, AdNullCache, BinomialGofSummary, CaseOutcome, CaseResultRow,
    EstimatorCell, EstimatorComparison, EstimatorComparisonRow, PairedTTest, Table1Result,
    WelchTTest,
};
