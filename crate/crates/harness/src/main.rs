use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use degree_mvn::experiments::run_cases;
use degree_mvn::output::{emit_outputs, RunResults};
use degree_mvn::{
    run_binomial_gof_experiment, run_estimator_comparison, run_table1, AdNullCache, ExperimentConfig,
    ExperimentKind, HarnessError, Overrides, Result,
};
use degree_mvn_core::gof::MvnCase;
use degree_mvn_core::GraphEnsembleSpec;

/// Monte Carlo study of the joint degree distribution of Erdős–Rényi graphs.
#[derive(Debug, Parser)]
#[command(name = "degree-mvn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Root seed for every random stream.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Graphs per (n, p) cell.
    #[arg(long, global = true)]
    replicates: Option<usize>,
    /// Output directory [default: results].
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Comma-separated node counts for the grid experiments.
    #[arg(long, global = true, value_delimiter = ',')]
    grid_n: Option<Vec<usize>>,
    /// Comma-separated edge probabilities for the grid experiments.
    #[arg(long, global = true, value_delimiter = ',')]
    grid_p: Option<Vec<f64>>,
    /// Test level [default: 0.05].
    #[arg(long, global = true)]
    significance: Option<f64>,
    /// Monte Carlo replicates of the Anderson–Darling null [default: 9999].
    #[arg(long, global = true)]
    ad_null_reps: Option<usize>,
    /// Worker threads [default: all cores].
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Comma-separated subset of indep_actual, dep_actual, indep_estimated, dep_estimated.
    #[arg(long, global = true, value_delimiter = ',', value_parser = case)]
    cases: Option<Vec<MvnCase>>,
    /// Give each case its own ensemble instead of sharing one per cell.
    #[arg(long, global = true)]
    fresh_ensembles: bool,
    /// `key=value` file with the same settings; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rejection percentages of the four cases on G(61, 0.1).
    Table1,
    /// The four cases over the p by n grid.
    Cases,
    /// Pooled binomial chi-square of the degree sequence.
    BinomialGof,
    /// Independent vs dependent cubic estimators of p.
    Estimators,
    /// Every experiment above.
    All,
    /// Write one replicate of an ensemble as an edge list.
    DumpGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        replicate: usize,
        /// Destination file.
        #[arg(long)]
        file: PathBuf,
    },
}

fn case(s: &str) -> std::result::Result<MvnCase, String> {
    MvnCase::from_label(s.trim()).ok_or_else(|| format!("unknown case `{s}`"))
}

impl CommonArgs {
    fn overrides(&self) -> Result<Overrides> {
        let cli = Overrides {
            seed: self.seed,
            replicates: self.replicates,
            out: self.out.clone(),
            grid_n: self.grid_n.clone(),
            grid_p: self.grid_p.clone(),
            significance: self.significance,
            ad_null_reps: self.ad_null_reps,
            threads: self.threads,
            fresh_ensembles: self.fresh_ensembles.then_some(true),
            cases: self.cases.clone(),
        };
        match &self.config {
            Some(path) => Ok(cli.merged_over(Overrides::from_config_file(path)?)),
            None => Ok(cli),
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let overrides = cli.common.overrides()?;
    if let Some(t) = overrides.threads {
        if t == 0 {
            return Err(HarnessError::param("threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| HarnessError::param(e.to_string()))?;
    }
    let (name, kinds): (&str, Vec<ExperimentKind>) = match &cli.command {
        Command::Table1 => ("table1", vec![ExperimentKind::Table1]),
        Command::Cases => ("cases", vec![ExperimentKind::Cases]),
        Command::BinomialGof => ("binomial-gof", vec![ExperimentKind::BinomialGof]),
        Command::Estimators => ("estimators", vec![ExperimentKind::Estimators]),
        Command::All => ("all", ExperimentKind::ALL.to_vec()),
        Command::DumpGraph { n, p, replicate, file } => {
            let seed = overrides.seed.unwrap_or(degree_mvn::config::DEFAULT_SEED);
            let spec = GraphEnsembleSpec::new(*n, *p, replicate + 1, degree_mvn::experiments::cell_seed(seed, *n, *p, 0))?;
            degree_mvn::edgelist::write_edgelist(file, &spec.graph(*replicate))?;
            println!("wrote {}", file.display());
            return Ok(());
        }
    };
    let configs = kinds
        .iter()
        .map(|&k| ExperimentConfig::build(k, &overrides))
        .collect::<Result<Vec<_>>>()?;
    let mut results = RunResults { command: name.to_string(), ..Default::default() };
    for cfg in &configs {
        match cfg.kind {
            ExperimentKind::Table1 => {
                let t = run_table1(cfg)?;
                for e in &t.entries {
                    println!("table1 {:<16} rejected {:.2}%", e.case.label(), e.rejected_percent);
                }
                results.table1 = Some(t);
            }
            ExperimentKind::Cases => {
                let nulls = AdNullCache::for_config(cfg);
                let out = run_cases(cfg, &nulls)?;
                for o in &out {
                    println!(
                        "case {} p={} n={} rej_pro={:.3} ad_p={:.4}",
                        o.case.number(),
                        o.row.p,
                        o.row.n,
                        o.row.rejection_proportion,
                        o.row.ad_p_value
                    );
                }
                results.cases = Some(out);
            }
            ExperimentKind::BinomialGof => {
                let b = run_binomial_gof_experiment(cfg)?;
                println!(
                    "binomial-gof categories={} df={} rejected {:.2}%",
                    b.categories.len(),
                    b.df,
                    100.0 * b.rejection_fraction
                );
                results.binomial_gof = Some(b);
            }
            ExperimentKind::Estimators => {
                let e = run_estimator_comparison(cfg)?;
                for c in &e.cells {
                    println!("estimators n={} p={} paired-t p={:.4}", c.row.n, c.row.p, c.row.paired_t_p_value);
                }
                results.estimators = Some(e);
            }
        }
    }
    let dir = configs[0].output_dir.clone();
    results.configs = configs;
    let written = emit_outputs(&results, &dir)?;
    println!("wrote {} files to {}", written.len(), dir.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
