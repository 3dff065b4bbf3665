//! Writes experiment results as CSV tables, plot-data CSVs, a JSONL test
//! report and a JSON manifest. Every number goes through [`sig6`] or
//! [`round6`], so identical results give byte-identical files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use degree_mvn_core::gof::{EmpiricalCdf, MvnCase};
use degree_mvn_core::stats::FiveNumber;
use degree_mvn_core::DistributionRef;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{ExperimentConfig, ExperimentKind, DEFAULT_SIGNIFICANCE};
use crate::error::{HarnessError, Result};
use crate::experiments::{BinomialGofSummary, CaseOutcome, EstimatorComparison, Table1Result};
use crate::format::{round6, sig6};

pub const CASE_HEADER: &str = "p,n,df,rej_pro,ad_p_value,cdf_similarity,cdf_scaling,degenerate_count";

/// Everything one invocation produced.
#[derive(Debug, Clone, Default)]
pub struct RunResults {
    /// Subcommand name, recorded in the manifest.
    pub command: String,
    pub configs: Vec<ExperimentConfig>,
    pub table1: Option<Table1Result>,
    pub cases: Option<Vec<CaseOutcome>>,
    pub binomial_gof: Option<BinomialGofSummary>,
    pub estimators: Option<EstimatorComparison>,
}

#[derive(Serialize)]
struct Manifest<'a> {
    library: &'static str,
    version: &'static str,
    command: &'a str,
    seed: Option<u64>,
    experiments: Vec<Value>,
}

/// Writes every output file into `dir`, creating it if needed, and returns
/// the paths written in order.
pub fn emit_outputs(results: &RunResults, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    let mut files: Vec<(String, String)> = Vec::new();
    let mut report = String::new();
    if let Some(t) = &results.table1 {
        table1_files(t, &mut files, &mut report);
    }
    if let Some(cases) = &results.cases {
        case_files(cases, significance_of(results, ExperimentKind::Cases), &mut files, &mut report)?;
    }
    if let Some(b) = &results.binomial_gof {
        binomial_files(b, &mut files, &mut report);
    }
    if let Some(e) = &results.estimators {
        estimator_files(e, significance_of(results, ExperimentKind::Estimators), &mut files, &mut report);
    }
    files.push(("report.jsonl".into(), report));
    files.push(("manifest.json".into(), manifest(results)?));

    let mut written = Vec::with_capacity(files.len());
    for (name, body) in files {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(|e| HarnessError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

fn significance_of(results: &RunResults, kind: ExperimentKind) -> f64 {
    results.configs.iter().find(|c| c.kind == kind).map_or(DEFAULT_SIGNIFICANCE, |c| c.significance)
}

fn manifest(results: &RunResults) -> Result<String> {
    let experiments = results
        .configs
        .iter()
        .map(|c| {
            let mut v = serde_json::to_value(c).expect("config serializes");
            v["name"] = json!(c.kind.name());
            v
        })
        .collect();
    let m = Manifest {
        library: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: &results.command,
        seed: results.configs.first().map(|c| c.seed),
        experiments,
    };
    let mut s = serde_json::to_string_pretty(&m).map_err(|e| HarnessError::param(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn push_record(report: &mut String, test: &str, statistic: f64, df: f64, p_value: f64, reject: bool, meta: Value) {
    let rec = json!({
        "test": test,
        "statistic": num(statistic),
        "df": num(df),
        "p_value": num(p_value),
        "reject": reject,
        "meta": meta,
    });
    report.push_str(&rec.to_string());
    report.push('\n');
}

/// JSON number rounded to six significant digits; `null` when not finite.
fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round6(x))
    } else {
        Value::Null
    }
}

fn table1_files(t: &Table1Result, files: &mut Vec<(String, String)>, report: &mut String) {
    let cell = |c: MvnCase| t.percent(c).map_or("NA".to_string(), sig6);
    let mut layout = String::from("model,actual_p,estimated_p\n");
    writeln!(layout, "independent,{},{}", cell(MvnCase::IndepActual), cell(MvnCase::IndepEstimated)).unwrap();
    writeln!(layout, "dependent,{},{}", cell(MvnCase::DepActual), cell(MvnCase::DepEstimated)).unwrap();
    files.push(("table1.csv".into(), layout));

    let mut detail = String::from("case,n,p,replicates,df,rejected_percent,degenerate_count,mean_score\n");
    for e in &t.entries {
        writeln!(
            detail,
            "{},{},{},{},{},{},{},{}",
            e.case.label(),
            t.n,
            sig6(t.p),
            t.replicates,
            sig6(e.df),
            sig6(e.rejected_percent),
            e.degenerate_count,
            sig6(e.mean_score)
        )
        .unwrap();
        push_record(
            report,
            &format!("table1_{}", e.case.label()),
            e.rejected_percent,
            e.df,
            f64::NAN,
            false,
            json!({"n": t.n, "p": num(t.p), "replicates": t.replicates, "statistic_kind": "rejected_percent"}),
        );
    }
    files.push(("table1_detail.csv".into(), detail));
}

fn case_files(
    cases: &[CaseOutcome],
    significance: f64,
    files: &mut Vec<(String, String)>,
    report: &mut String,
) -> Result<()> {
    let mut qq = String::from("case,p,n,theoretical,sample\n");
    let mut curves = String::from("case,p,n,x,ecdf,cdf\n");
    for case in MvnCase::ALL {
        let rows: Vec<&CaseOutcome> = cases.iter().filter(|o| o.case == case).collect();
        if rows.is_empty() {
            continue;
        }
        let mut csv = format!("{CASE_HEADER}\n");
        for o in &rows {
            let r = &o.row;
            writeln!(
                csv,
                "{},{},{},{},{},{},{},{}",
                sig6(r.p),
                r.n,
                sig6(r.df),
                sig6(r.rejection_proportion),
                sig6(r.ad_p_value),
                sig6(r.cdf_similarity),
                sig6(r.cdf_scaling),
                r.degenerate_count
            )
            .unwrap();
            push_record(
                report,
                &format!("anderson_darling_{}", case.label()),
                o.ad_statistic,
                r.df,
                r.ad_p_value,
                r.ad_p_value < significance,
                json!({
                    "n": r.n,
                    "p": num(r.p),
                    "rejection_proportion": num(r.rejection_proportion),
                    "valid_scores": o.scores.len(),
                    "degenerate_count": r.degenerate_count,
                }),
            );
            if o.scores.is_empty() {
                continue;
            }
            let reference = DistributionRef::chi_square(r.df)?;
            for (theoretical, sample) in degree_mvn_core::gof::qq_pairs(&o.scores, &reference)? {
                writeln!(qq, "{},{},{},{},{}", case.label(), sig6(r.p), r.n, sig6(theoretical), sig6(sample)).unwrap();
            }
            for (x, f_n) in EmpiricalCdf::new(&o.scores)?.points() {
                writeln!(
                    curves,
                    "{},{},{},{},{},{}",
                    case.label(),
                    sig6(r.p),
                    r.n,
                    sig6(x),
                    sig6(f_n),
                    sig6(reference.cdf(x)?)
                )
                .unwrap();
            }
        }
        files.push((format!("case{}.csv", case.number()), csv));
    }
    files.push(("qq_cases.csv".into(), qq));
    files.push(("ecdf_curves.csv".into(), curves));
    Ok(())
}

fn binomial_files(b: &BinomialGofSummary, files: &mut Vec<(String, String)>, report: &mut String) {
    let mut summary = String::from(
        "n,p,replicates,categories,df,critical_value,rejection_fraction,statistic_mean,statistic_variance\n",
    );
    writeln!(
        summary,
        "{},{},{},{},{},{},{},{},{}",
        b.n,
        sig6(b.p),
        b.replicates,
        b.categories.len(),
        sig6(b.df),
        sig6(b.critical_value),
        sig6(b.rejection_fraction),
        sig6(b.statistic_mean),
        sig6(b.statistic_variance)
    )
    .unwrap();
    files.push(("binomial_gof.csv".into(), summary));

    let mut bins = String::from("lo,hi,expected\n");
    for (c, e) in b.categories.iter().zip(&b.expected) {
        writeln!(bins, "{},{},{}", c.lo, c.hi, sig6(*e)).unwrap();
    }
    files.push(("binomial_gof_bins.csv".into(), bins));

    let mut residuals = String::from("lower,upper,observed,expected,residual\n");
    for r in &b.residual_bins {
        writeln!(residuals, "{},{},{},{},{}", sig6(r.lower), sig6(r.upper), r.observed, sig6(r.expected), sig6(r.residual))
            .unwrap();
    }
    files.push(("binomial_gof_residuals.csv".into(), residuals));

    let mut qq = String::from("theoretical,sample\n");
    for (t, s) in &b.qq {
        writeln!(qq, "{},{}", sig6(*t), sig6(*s)).unwrap();
    }
    files.push(("qq_binomial_gof.csv".into(), qq));

    push_record(
        report,
        "pooled_binomial_chisq",
        b.statistic_mean,
        b.df,
        f64::NAN,
        false,
        json!({
            "n": b.n,
            "p": num(b.p),
            "replicates": b.replicates,
            "rejection_fraction": num(b.rejection_fraction),
            "statistic_kind": "mean_statistic",
        }),
    );
}

fn five(s: &mut String, n: usize, p: f64, which: &str, f: &FiveNumber) {
    writeln!(s, "{},{},{which},{},{},{},{},{}", n, sig6(p), sig6(f.min), sig6(f.q1), sig6(f.median), sig6(f.q3), sig6(f.max))
        .unwrap();
}

fn estimator_files(e: &EstimatorComparison, significance: f64, files: &mut Vec<(String, String)>, report: &mut String) {
    let mut table = String::from(
        "n,p,bias_indep,bias_dep,var_indep,var_dep,mse_indep,mse_dep,paired_t_p_value,correlation_of_estimates,fallback_indep,fallback_dep\n",
    );
    let mut ttest = String::from("n,p,mean_difference,sd_difference,t_statistic,df,p_value,zero_variance,welch_t_statistic,welch_df,welch_p_value\n");
    let mut boxes = String::from("n,p,estimator,min,q1,median,q3,max\n");
    let mut bias = String::from("n,p,bias_indep,bias_dep,mse_indep,mse_dep\n");
    let mut scatter = String::from("n,p,replicate,p_hat_indep,p_hat_dep\n");
    for c in &e.cells {
        let r = &c.row;
        writeln!(
            table,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            sig6(r.p),
            sig6(r.bias_indep),
            sig6(r.bias_dep),
            sig6(r.var_indep),
            sig6(r.var_dep),
            sig6(r.mse_indep),
            sig6(r.mse_dep),
            sig6(r.paired_t_p_value),
            sig6(r.correlation_of_estimates),
            c.fallback_indep,
            c.fallback_dep
        )
        .unwrap();
        let t = &c.ttest;
        writeln!(
            ttest,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            sig6(r.p),
            sig6(t.mean_difference),
            sig6(t.sd_difference),
            sig6(t.t_statistic),
            sig6(t.df),
            sig6(t.p_value),
            t.zero_variance,
            sig6(c.welch.t_statistic),
            sig6(c.welch.df),
            sig6(c.welch.p_value)
        )
        .unwrap();
        five(&mut boxes, r.n, r.p, "indep", &c.box_indep);
        five(&mut boxes, r.n, r.p, "dep", &c.box_dep);
        writeln!(bias, "{},{},{},{},{},{}", r.n, sig6(r.p), sig6(r.bias_indep), sig6(r.bias_dep), sig6(r.mse_indep), sig6(r.mse_dep))
            .unwrap();
        for (k, (a, b)) in c.estimates_indep.iter().zip(&c.estimates_dep).enumerate() {
            writeln!(scatter, "{},{},{k},{},{}", r.n, sig6(r.p), sig6(*a), sig6(*b)).unwrap();
        }
        push_record(
            report,
            "paired_t",
            t.t_statistic,
            t.df,
            t.p_value,
            t.p_value < significance,
            json!({"n": r.n, "p": num(r.p), "zero_variance": t.zero_variance}),
        );
    }
    files.push(("estimator_comparison.csv".into(), table));
    files.push(("ttest.csv".into(), ttest));
    files.push(("boxplot.csv".into(), boxes));
    files.push(("bias_curve.csv".into(), bias));
    files.push(("scatter.csv".into(), scatter));
}
