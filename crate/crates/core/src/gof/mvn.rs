use crate::graph::{estimate_p, Graph};
use crate::structured_cov::{Dependence, MvnModel};
use crate::{Error, Result};

/// Where the model's `p` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PMode {
    /// The generating probability.
    Actual,
    /// The edge fraction of the graph being scored; costs one degree of freedom.
    Estimated,
}

/// The four ways of scoring a degree vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum MvnCase {
    IndepActual,
    DepActual,
    IndepEstimated,
    DepEstimated,
}

impl MvnCase {
    pub const ALL: [MvnCase; 4] = [
        MvnCase::IndepActual,
        MvnCase::DepActual,
        MvnCase::IndepEstimated,
        MvnCase::DepEstimated,
    ];

    pub fn dependence(self) -> Dependence {
        match self {
            MvnCase::IndepActual | MvnCase::IndepEstimated => Dependence::Independent,
            MvnCase::DepActual | MvnCase::DepEstimated => Dependence::Dependent,
        }
    }

    pub fn p_mode(self) -> PMode {
        match self {
            MvnCase::IndepActual | MvnCase::DepActual => PMode::Actual,
            MvnCase::IndepEstimated | MvnCase::DepEstimated => PMode::Estimated,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MvnCase::IndepActual => "indep_actual",
            MvnCase::DepActual => "dep_actual",
            MvnCase::IndepEstimated => "indep_estimated",
            MvnCase::DepEstimated => "dep_estimated",
        }
    }

    /// 1-based position in the order independent/actual, dependent/actual,
    /// independent/estimated, dependent/estimated.
    pub fn number(self) -> usize {
        match self {
            MvnCase::IndepActual => 1,
            MvnCase::DepActual => 2,
            MvnCase::IndepEstimated => 3,
            MvnCase::DepEstimated => 4,
        }
    }

    pub fn from_label(label: &str) -> Option<MvnCase> {
        MvnCase::ALL.into_iter().find(|c| c.label() == label)
    }
}

/// Reference chi-square degrees of freedom of the Mahalanobis score.
pub fn reference_df(n: usize, mode: PMode) -> f64 {
    match mode {
        PMode::Actual => n as f64,
        PMode::Estimated => n as f64 - 1.0,
    }
}

/// `(x - mu)^T Sigma^{-1} (x - mu)` through the structured `O(N)` path.
pub fn mahalanobis_score(x: &[f64], model: &MvnModel) -> Result<f64> {
    if x.len() != model.dim() {
        return Err(Error::DimensionMismatch { expected: model.dim(), found: x.len() });
    }
    let m = model.mean();
    let (sum, sum_sq) = x.iter().fold((0.0, 0.0), |(s, q), &v| {
        let d = v - m;
        (s + d, q + d * d)
    });
    model.sigma().quadratic_form_from_sums(sum, sum_sq)
}

/// Score of one graph, or `Degenerate` when the estimated edge fraction is 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphScore {
    Score(f64),
    Degenerate,
}

impl GraphScore {
    pub fn value(self) -> Option<f64> {
        match self {
            GraphScore::Score(s) => Some(s),
            GraphScore::Degenerate => None,
        }
    }
}

/// Scores the degree vector of `g` under `case`, with `p` the generating
/// probability (ignored in the estimated modes).
pub fn score_graph(g: &Graph, p: f64, case: MvnCase) -> Result<GraphScore> {
    let model_p = match case.p_mode() {
        PMode::Actual => p,
        PMode::Estimated => {
            let p_hat = estimate_p(g);
            if p_hat <= 0.0 || p_hat >= 1.0 {
                return Ok(GraphScore::Degenerate);
            }
            p_hat
        }
    };
    let model = MvnModel::for_graph(g.n(), model_p, case.dependence())?;
    let m = model.mean();
    let (sum, sum_sq) = g.degrees().iter().fold((0.0, 0.0), |(s, q), &x| {
        let d = x as f64 - m;
        (s + d, q + d * d)
    });
    model.sigma().quadratic_form_from_sums(sum, sum_sq).map(GraphScore::Score)
}
