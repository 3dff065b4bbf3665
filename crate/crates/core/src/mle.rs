//! Estimators of the edge probability `p` from a degree vector.
//!
//! Besides the moment estimator, the likelihood of the MVN model has a
//! closed-form stationarity condition that is a cubic in `p`, one under
//! independent and one under dependent degrees. [`numeric_mle`] maximizes
//! the same likelihood directly and serves as a cross-check of the cubics.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::math::{abs, sqrt};
use crate::structured_cov::{Dependence, MvnModel};
use crate::{Error, Result};

/// A degree vector `x` of dimension `N` from an `n`-node graph, with its
/// sums cached exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeData {
    x: Vec<u32>,
    n: usize,
    sum: u64,
    sum_sq: u64,
}

impl DegreeData {
    pub fn new(x: Vec<u32>, n: usize) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::InvalidParameter("degree vector must be non-empty"));
        }
        if n < 2 {
            return Err(Error::InvalidParameter("graph size must be at least 2"));
        }
        if x.iter().any(|&d| d as usize > n - 1) {
            return Err(Error::InvalidParameter("degree exceeds n - 1"));
        }
        let sum = x.iter().map(|&d| d as u64).sum();
        let sum_sq = x.iter().map(|&d| (d as u64) * (d as u64)).sum();
        Ok(Self { x, n, sum, sum_sq })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self::new(g.degrees().to_vec(), g.n()).expect("graph degrees are valid")
    }

    pub fn degrees(&self) -> &[u32] {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vector dimension `N`.
    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    pub fn sum_sq(&self) -> u64 {
        self.sum_sq
    }

    /// `sum_i x_i sum_{j != i} x_j = (sum x)^2 - sum x^2`.
    pub fn cross_sum(&self) -> u128 {
        (self.sum as u128) * (self.sum as u128) - self.sum_sq as u128
    }
}

/// `c3 p^3 + c2 p^2 + c1 p + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Cubic {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl Cubic {
    pub fn eval(&self, p: f64) -> f64 {
        ((self.c3 * p + self.c2) * p + self.c1) * p + self.c0
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        abs(self.c3).max(abs(self.c2)).max(abs(self.c1)).max(abs(self.c0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum EstimateMethod {
    Moment,
    CubicIndependent,
    CubicDependent,
    NumericMle,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EstimateResult {
    pub p_hat: f64,
    pub method: EstimateMethod,
    /// Every root located in the open unit interval, ascending.
    pub roots_found: Vec<f64>,
    pub converged: bool,
}

/// `sum x_i / (N (n - 1))`.
pub fn moment_estimate(d: &DegreeData) -> f64 {
    d.sum as f64 / (d.dim() as f64 * (d.n as f64 - 1.0))
}

/// Stationarity cubic of the likelihood under independent degrees:
///
/// `2p^3 + ((n - 4) - 2 S1/N) p^2 + (1 + 2 S2/(N(n - 1))) p - S2/(N(n - 1))`.
pub fn cubic_independent_coefficients(d: &DegreeData) -> Cubic {
    let n = d.n as f64;
    let big_n = d.dim() as f64;
    let s1 = d.sum as f64;
    let s2 = d.sum_sq as f64;
    let scaled_sq = s2 / (big_n * (n - 1.0));
    Cubic {
        c3: 2.0,
        c2: (n - 4.0) - 2.0 * s1 / big_n,
        c1: 1.0 + 2.0 * scaled_sq,
        c0: -scaled_sq,
    }
}

/// Stationarity cubic of the likelihood under dependent degrees (`N = n`):
///
/// `4p^3 + ((n - 7) - 2 S1/N) p^2 + 2 (1 + ((n + N - 3) S2 - C)/(N(n - 1)(n - 2))) p
///  + (C - (n + N - 3) S2)/(N(n - 1)(n - 2))`, with `C = sum_i x_i sum_{j != i} x_j`.
pub fn cubic_dependent_coefficients(d: &DegreeData) -> Result<Cubic> {
    if d.dim() != d.n {
        return Err(Error::Convention { n: d.n, dim: d.dim() });
    }
    if d.n < 3 {
        return Err(Error::InvalidParameter("dependent cubic needs n >= 3"));
    }
    let n = d.n as f64;
    let big_n = d.dim() as f64;
    let s1 = d.sum as f64;
    let s2 = d.sum_sq as f64;
    let cross = d.cross_sum() as f64;
    let denom = big_n * (n - 1.0) * (n - 2.0);
    let weighted = (n + big_n - 3.0) * s2 - cross;
    Ok(Cubic {
        c3: 4.0,
        c2: (n - 7.0) - 2.0 * s1 / big_n,
        c1: 2.0 * (1.0 + weighted / denom),
        c0: -weighted / denom,
    })
}

const ROOT_EPS: f64 = 1e-9;
const GRID_POINTS: usize = 1024;
const ROOT_TOL: f64 = 1e-12;

/// Locates every sign change of `cubic` on a 1024-point grid over
/// `[1e-9, 1 - 1e-9]`, refines each by bisection and returns the root
/// closest to `anchor`. With no root the anchor itself is returned,
/// flagged `converged = false`.
pub fn solve_cubic_in_unit_interval(cubic: &Cubic, anchor: f64, method: EstimateMethod) -> EstimateResult {
    let step = (1.0 - 2.0 * ROOT_EPS) / (GRID_POINTS - 1) as f64;
    let grid = |k: usize| if k == GRID_POINTS - 1 { 1.0 - ROOT_EPS } else { ROOT_EPS + k as f64 * step };
    let mut roots = Vec::new();
    let mut prev_p = grid(0);
    let mut prev_v = cubic.eval(prev_p);
    if prev_v == 0.0 {
        roots.push(prev_p);
    }
    for k in 1..GRID_POINTS {
        let p = grid(k);
        let v = cubic.eval(p);
        if v == 0.0 {
            roots.push(p);
        } else if prev_v != 0.0 && (prev_v < 0.0) != (v < 0.0) {
            roots.push(bisect(cubic, prev_p, prev_v, p));
        }
        prev_p = p;
        prev_v = v;
    }
    let best = roots.iter().copied().fold(None, |best: Option<f64>, r| match best {
        Some(b) if abs(b - anchor) <= abs(r - anchor) => Some(b),
        _ => Some(r),
    });
    match best {
        Some(p_hat) => EstimateResult { p_hat, method, roots_found: roots, converged: true },
        None => EstimateResult { p_hat: anchor, method, roots_found: roots, converged: false },
    }
}

fn bisect(cubic: &Cubic, mut lo: f64, lo_v: f64, mut hi: f64) -> f64 {
    let lo_negative = lo_v < 0.0;
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        let v = cubic.eval(mid);
        if v == 0.0 {
            return mid;
        }
        if (v < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Root of the independence cubic nearest the moment estimate.
pub fn estimate_cubic_independent(d: &DegreeData) -> EstimateResult {
    solve_cubic_in_unit_interval(&cubic_independent_coefficients(d), moment_estimate(d), EstimateMethod::CubicIndependent)
}

/// Root of the dependence cubic nearest the moment estimate.
pub fn estimate_cubic_dependent(d: &DegreeData) -> Result<EstimateResult> {
    Ok(solve_cubic_in_unit_interval(
        &cubic_dependent_coefficients(d)?,
        moment_estimate(d),
        EstimateMethod::CubicDependent,
    ))
}

/// MVN log-likelihood of the degree data at edge probability `p`,
/// constants dropped.
pub fn log_likelihood(d: &DegreeData, p: f64, dependence: Dependence) -> Result<f64> {
    let model = MvnModel::new(d.n, d.dim(), p, dependence)?;
    model.log_likelihood_from_moments(d.sum as f64, d.sum_sq as f64)
}

const MLE_LO: f64 = 1e-6;
const MLE_HI: f64 = 1.0 - 1e-6;
const MLE_TOL: f64 = 1e-10;

/// Golden-section maximization of [`log_likelihood`] over `(1e-6, 1 - 1e-6)`.
pub fn numeric_mle(d: &DegreeData, dependence: Dependence) -> Result<EstimateResult> {
    // surface model errors (dimension convention, n too small) before searching
    MvnModel::new(d.n, d.dim(), 0.5, dependence)?;
    let ll = |p: f64| match log_likelihood(d, p, dependence) {
        Ok(v) if v.is_finite() => v,
        _ => f64::NEG_INFINITY,
    };
    let inv_phi = (sqrt(5.0) - 1.0) / 2.0;
    let (mut lo, mut hi) = (MLE_LO, MLE_HI);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = ll(x1);
    let mut f2 = ll(x2);
    let mut iterations = 0;
    while hi - lo > MLE_TOL && iterations < 500 {
        iterations += 1;
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = ll(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = ll(x1);
        }
    }
    let p_hat = 0.5 * (lo + hi);
    let converged = hi - lo <= MLE_TOL && ll(p_hat).is_finite();
    Ok(EstimateResult { p_hat, method: EstimateMethod::NumericMle, roots_found: Vec::new(), converged })
}
