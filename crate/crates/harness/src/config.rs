//! Experiment configuration: built-in defaults, `key=value` config files and
//! command-line overrides.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use degree_mvn_core::MvnCase;
use serde::Serialize;

use crate::error::{HarnessError, Result};

pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_AD_NULL_REPS: usize = 9_999;
pub const DEFAULT_SIGNIFICANCE: f64 = 0.05;
pub const DEFAULT_COLLAPSE_THRESHOLD: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Table1,
    Cases,
    BinomialGof,
    Estimators,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 4] = [
        ExperimentKind::Table1,
        ExperimentKind::Cases,
        ExperimentKind::BinomialGof,
        ExperimentKind::Estimators,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Table1 => "table1",
            ExperimentKind::Cases => "cases",
            ExperimentKind::BinomialGof => "binomial-gof",
            ExperimentKind::Estimators => "estimators",
        }
    }

    fn uses_grid(self) -> bool {
        matches!(self, ExperimentKind::Cases | ExperimentKind::Estimators)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub n_values: Vec<usize>,
    pub p_values: Vec<f64>,
    pub replicates: usize,
    pub significance: f64,
    pub cases: Vec<MvnCase>,
    pub seed: u64,
    pub ad_null_reps: usize,
    pub fresh_ensembles: bool,
    pub collapse_threshold: f64,
    /// Not serialized: the manifest must not depend on where it is written.
    #[serde(skip)]
    pub output_dir: PathBuf,
}

impl ExperimentConfig {
    pub fn defaults(kind: ExperimentKind) -> Self {
        let (n_values, p_values, replicates) = match kind {
            ExperimentKind::Table1 | ExperimentKind::BinomialGof => (vec![61], vec![0.1], 10_000),
            ExperimentKind::Cases => (vec![10, 50, 100, 250, 500], vec![0.01, 0.1, 0.5], 1_000),
            ExperimentKind::Estimators => (vec![5, 100], vec![0.1, 0.3, 0.5, 0.7, 0.9], 10_000),
        };
        Self {
            kind,
            n_values,
            p_values,
            replicates,
            significance: DEFAULT_SIGNIFICANCE,
            cases: MvnCase::ALL.to_vec(),
            seed: DEFAULT_SEED,
            ad_null_reps: DEFAULT_AD_NULL_REPS,
            fresh_ensembles: false,
            collapse_threshold: DEFAULT_COLLAPSE_THRESHOLD,
            output_dir: PathBuf::from("results"),
        }
    }

    /// Defaults for `kind` with `overrides` applied.
    pub fn build(kind: ExperimentKind, overrides: &Overrides) -> Result<Self> {
        let mut cfg = Self::defaults(kind);
        cfg.apply(overrides);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&mut self, o: &Overrides) {
        if let Some(seed) = o.seed {
            self.seed = seed;
        }
        if let Some(r) = o.replicates {
            self.replicates = r;
        }
        if let Some(out) = &o.out {
            self.output_dir = out.clone();
        }
        if self.kind.uses_grid() {
            if let Some(ns) = &o.grid_n {
                self.n_values = ns.clone();
            }
            if let Some(ps) = &o.grid_p {
                self.p_values = ps.clone();
            }
        }
        if let Some(s) = o.significance {
            self.significance = s;
        }
        if let Some(m) = o.ad_null_reps {
            self.ad_null_reps = m;
        }
        if let Some(f) = o.fresh_ensembles {
            self.fresh_ensembles = f;
        }
        if let Some(c) = &o.cases {
            self.cases = c.clone();
        }
    }

    pub fn validate(&self) -> Result<()> {
        let min_n = if self.kind == ExperimentKind::Estimators { 3 } else { 2 };
        let min_reps = if self.kind == ExperimentKind::Estimators { 2 } else { 1 };
        if self.n_values.is_empty() || self.p_values.is_empty() {
            return Err(HarnessError::param("parameter grids must be non-empty"));
        }
        if let Some(n) = self.n_values.iter().find(|&&n| n < min_n) {
            return Err(HarnessError::param(format!("n = {n} is below the minimum {min_n}")));
        }
        if let Some(p) = self.p_values.iter().find(|&&p| !(p > 0.0 && p < 1.0)) {
            return Err(HarnessError::param(format!("p = {p} must lie strictly inside (0, 1)")));
        }
        if self.replicates < min_reps {
            return Err(HarnessError::param(format!("replicates must be at least {min_reps}")));
        }
        if !(self.significance > 0.0 && self.significance < 1.0) {
            return Err(HarnessError::param("significance must lie in (0, 1)"));
        }
        if self.ad_null_reps == 0 {
            return Err(HarnessError::param("ad-null-reps must be at least 1"));
        }
        if self.cases.is_empty() {
            return Err(HarnessError::param("at least one case is required"));
        }
        Ok(())
    }
}

/// Optional settings from the command line or a config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub replicates: Option<usize>,
    pub out: Option<PathBuf>,
    pub grid_n: Option<Vec<usize>>,
    pub grid_p: Option<Vec<f64>>,
    pub significance: Option<f64>,
    pub ad_null_reps: Option<usize>,
    pub threads: Option<usize>,
    pub fresh_ensembles: Option<bool>,
    pub cases: Option<Vec<MvnCase>>,
}

impl Overrides {
    /// `self` wins wherever both are set.
    pub fn merged_over(self, base: Overrides) -> Overrides {
        Overrides {
            seed: self.seed.or(base.seed),
            replicates: self.replicates.or(base.replicates),
            out: self.out.or(base.out),
            grid_n: self.grid_n.or(base.grid_n),
            grid_p: self.grid_p.or(base.grid_p),
            significance: self.significance.or(base.significance),
            ad_null_reps: self.ad_null_reps.or(base.ad_null_reps),
            threads: self.threads.or(base.threads),
            fresh_ensembles: self.fresh_ensembles.or(base.fresh_ensembles),
            cases: self.cases.or(base.cases),
        }
    }

    pub fn from_config_file(path: &Path) -> Result<Overrides> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        Self::parse_config(&text).map_err(|message| HarnessError::Parse { path: path.to_path_buf(), message })
    }

    /// Parses `key=value` lines; `#` starts a comment. Keys are the long
    /// flag names without the leading dashes, e.g. `grid-n = 10,50`.
    pub fn parse_config(text: &str) -> std::result::Result<Overrides, String> {
        let mut o = Overrides::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let err = |e: String| format!("line {}: {key}: {e}", lineno + 1);
            match key.replace('_', "-").as_str() {
                "seed" => o.seed = Some(parse_one(value).map_err(err)?),
                "replicates" => o.replicates = Some(parse_one(value).map_err(err)?),
                "out" => o.out = Some(PathBuf::from(value)),
                "grid-n" => o.grid_n = Some(parse_list(value).map_err(err)?),
                "grid-p" => o.grid_p = Some(parse_list(value).map_err(err)?),
                "significance" => o.significance = Some(parse_one(value).map_err(err)?),
                "ad-null-reps" => o.ad_null_reps = Some(parse_one(value).map_err(err)?),
                "threads" => o.threads = Some(parse_one(value).map_err(err)?),
                "fresh-ensembles" => o.fresh_ensembles = Some(parse_one(value).map_err(err)?),
                "cases" => o.cases = Some(parse_cases(value).map_err(err)?),
                other => return Err(format!("line {}: unknown key `{other}`", lineno + 1)),
            }
        }
        Ok(o)
    }
}

fn parse_one<T: FromStr>(s: &str) -> std::result::Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.trim().parse::<T>().map_err(|e| format!("cannot parse `{s}`: {e}"))
}

/// Comma-separated list.
pub fn parse_list<T: FromStr>(s: &str) -> std::result::Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_one).collect()
}

pub fn parse_cases(s: &str) -> std::result::Result<Vec<MvnCase>, String> {
    s.split(',')
        .map(|t| MvnCase::from_label(t.trim()).ok_or_else(|| format!("unknown case `{}`", t.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_mirror_experiment_grids() {
        let c = ExperimentConfig::defaults(ExperimentKind::Cases);
        assert_eq!(c.n_values, [10, 50, 100, 250, 500]);
        assert_eq!(c.p_values, [0.01, 0.1, 0.5]);
        assert_eq!(c.replicates, 1_000);
        let t = ExperimentConfig::defaults(ExperimentKind::Table1);
        assert_eq!((t.n_values[0], t.p_values[0], t.replicates), (61, 0.1, 10_000));
        assert!(c.validate().is_ok() && t.validate().is_ok());
    }

    #[test]
    fn config_file_parsing() {
        let o = Overrides::parse_config(
            "# comment\nseed = 7\ngrid-n=10, 50\ngrid_p = 0.5\nfresh-ensembles=true\ncases=dep_actual,indep_estimated\n",
        )
        .unwrap();
        assert_eq!(o.seed, Some(7));
        assert_eq!(o.grid_n, Some(vec![10, 50]));
        assert_eq!(o.grid_p, Some(vec![0.5]));
        assert_eq!(o.fresh_ensembles, Some(true));
        assert_eq!(o.cases, Some(vec![MvnCase::DepActual, MvnCase::IndepEstimated]));
        assert!(Overrides::parse_config("bogus=1").is_err());
        assert!(Overrides::parse_config("seed").is_err());
        assert!(Overrides::parse_config("seed=abc").is_err());
    }

    #[test]
    fn cli_overrides_win_over_file() {
        let file = Overrides { seed: Some(1), replicates: Some(10), ..Default::default() };
        let cli = Overrides { seed: Some(2), ..Default::default() };
        let merged = cli.merged_over(file);
        assert_eq!((merged.seed, merged.replicates), (Some(2), Some(10)));
    }

    #[test]
    fn grid_overrides_skip_fixed_experiments() {
        let o = Overrides { grid_n: Some(vec![20]), ..Default::default() };
        assert_eq!(ExperimentConfig::build(ExperimentKind::Table1, &o).unwrap().n_values, [61]);
        assert_eq!(ExperimentConfig::build(ExperimentKind::Cases, &o).unwrap().n_values, [20]);
    }

    #[test]
    fn validation_errors() {
        let bad = [
            Overrides { grid_p: Some(vec![0.0]), ..Default::default() },
            Overrides { grid_n: Some(vec![1]), ..Default::default() },
            Overrides { replicates: Some(0), ..Default::default() },
            Overrides { significance: Some(1.0), ..Default::default() },
            Overrides { ad_null_reps: Some(0), ..Default::default() },
        ];
        for o in bad {
            let e = ExperimentConfig::build(ExperimentKind::Cases, &o).unwrap_err();
            assert_eq!(e.exit_code(), 2);
        }
        let o = Overrides { grid_n: Some(vec![2]), ..Default::default() };
        assert!(ExperimentConfig::build(ExperimentKind::Estimators, &o).is_err());
    }
}
