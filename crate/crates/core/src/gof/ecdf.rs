//! Tests of a sample of scores against a fully specified reference
//! distribution.

use alloc::vec::Vec;

use rand::distributions::Open01;
use rand::Rng;

use crate::math::{ln, ln1p};
use crate::rng::{SeedSequence, StreamDomain};
use crate::special::DistributionRef;
use crate::{Error, Result};

/// Clamp bounds applied to CDF values when clamping is requested.
pub const CDF_CLAMP: f64 = 1e-14;

/// Right-continuous empirical distribution function of a sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidParameter("empirical CDF needs at least one sample"));
        }
        if samples.iter().any(|x| x.is_nan()) {
            return Err(Error::InvalidParameter("samples must not be NaN"));
        }
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { sorted })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted_samples(&self) -> &[f64] {
        &self.sorted
    }

    /// `#{T_i <= x} / n`.
    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&v| v <= x) as f64 / self.sorted.len() as f64
    }

    /// `(x_(i), F_n(x_(i)))` for every order statistic. Tied points all take
    /// the value of the step at the tie.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.sorted.iter().map(move |&x| (x, self.eval(x)))
    }
}

fn ln_clamp_bounds() -> (f64, f64) {
    (ln(CDF_CLAMP), ln1p(-CDF_CLAMP))
}

fn checked_log(v: f64, clamp: bool) -> Result<f64> {
    if clamp {
        let (lo, hi) = ln_clamp_bounds();
        if v.is_nan() {
            return Err(Error::NumericOverflow);
        }
        Ok(v.clamp(lo, hi))
    } else if v.is_finite() && v < 0.0 {
        Ok(v)
    } else {
        Err(Error::NumericOverflow)
    }
}

/// Anderson–Darling statistic from the per-order-statistic log CDF and log
/// survival values.
fn ad_from_logs(ln_f: &[f64], ln_s: &[f64]) -> f64 {
    let n = ln_f.len();
    let mut acc = 0.0;
    for i in 1..=n {
        acc += (2 * i - 1) as f64 * (ln_f[i - 1] + ln_s[n - i]);
    }
    -(n as f64) - acc / n as f64
}

/// `A = -n - (1/n) sum (2i - 1)[ln F(x_(i)) + ln(1 - F(x_(n+1-i)))]`.
///
/// Without `clamp`, any CDF value of exactly 0 or 1 is an error; with it,
/// CDF values are held inside `[1e-14, 1 - 1e-14]`.
pub fn anderson_darling_statistic(samples: &[f64], reference: &DistributionRef, clamp: bool) -> Result<f64> {
    let ecdf = EmpiricalCdf::new(samples)?;
    let mut ln_f = Vec::with_capacity(ecdf.len());
    let mut ln_s = Vec::with_capacity(ecdf.len());
    for &x in ecdf.sorted_samples() {
        ln_f.push(checked_log(reference.ln_cdf(x)?, clamp)?);
        ln_s.push(checked_log(reference.ln_sf(x)?, clamp)?);
    }
    Ok(ad_from_logs(&ln_f, &ln_s))
}

/// Null distribution of the Anderson–Darling statistic for a given sample
/// size.
///
/// For a continuous, fully specified reference the statistic of `F(X)`
/// against the uniform equals the statistic of `X` against `F`, so the null
/// is simulated once from uniforms and reused for every reference.
#[derive(Debug, Clone, PartialEq)]
pub struct AdNullDistribution {
    size: usize,
    sorted: Vec<f64>,
}

impl AdNullDistribution {
    /// Statistic of null replicate `index`.
    pub fn null_statistic(size: usize, seeds: &SeedSequence, index: u64) -> f64 {
        let mut rng = seeds.stream(StreamDomain::AdNull, index);
        let mut u: Vec<f64> = (0..size).map(|_| rng.sample(Open01)).collect();
        u.sort_by(f64::total_cmp);
        let ln_f: Vec<f64> = u.iter().map(|&v| ln(v)).collect();
        let ln_s: Vec<f64> = u.iter().map(|&v| ln1p(-v)).collect();
        ad_from_logs(&ln_f, &ln_s)
    }

    pub fn simulate(size: usize, reps: usize, seeds: &SeedSequence) -> Result<Self> {
        let stats = (0..reps as u64).map(|k| Self::null_statistic(size, seeds, k)).collect();
        Self::from_statistics(size, stats)
    }

    /// Wraps externally computed (e.g. parallel) null statistics.
    pub fn from_statistics(size: usize, mut stats: Vec<f64>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidParameter("sample size must be positive"));
        }
        if stats.is_empty() {
            return Err(Error::InvalidParameter("null distribution needs at least one replicate"));
        }
        stats.sort_by(f64::total_cmp);
        Ok(Self { size, sorted: stats })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn reps(&self) -> usize {
        self.sorted.len()
    }

    /// `(1 + #{null >= observed}) / (M + 1)`; never below `1 / (M + 1)`.
    pub fn p_value(&self, observed: f64) -> f64 {
        let at_least = self.sorted.len() - self.sorted.partition_point(|&v| v < observed);
        (1 + at_least) as f64 / (self.sorted.len() + 1) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdOptions {
    pub null_reps: usize,
    pub seed: u64,
    pub clamp: bool,
}

impl Default for AdOptions {
    fn default() -> Self {
        Self { null_reps: 9_999, seed: 0, clamp: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AdOutcome {
    pub statistic: f64,
    pub p_value: f64,
}

/// Anderson–Darling test with a Monte Carlo p-value.
pub fn anderson_darling(samples: &[f64], reference: &DistributionRef, options: &AdOptions) -> Result<AdOutcome> {
    let statistic = anderson_darling_statistic(samples, reference, options.clamp)?;
    let null = AdNullDistribution::simulate(samples.len(), options.null_reps, &SeedSequence::new(options.seed))?;
    Ok(AdOutcome { statistic, p_value: null.p_value(statistic) })
}

/// `sum_i (F_n(x_i) - F(x_i))^2` over the observed points.
pub fn cdf_similarity(ecdf: &EmpiricalCdf, reference: &DistributionRef) -> Result<f64> {
    let mut acc = 0.0;
    for (x, fn_x) in ecdf.points() {
        let d = fn_x - reference.cdf(x)?;
        acc += d * d;
    }
    Ok(acc)
}

/// `sum_i (F_n(x_i) - F(x_i))^2 / [F(x_i)(1 - F(x_i))]` over the observed points.
pub fn cdf_scaling(ecdf: &EmpiricalCdf, reference: &DistributionRef, clamp: bool) -> Result<f64> {
    let mut acc = 0.0;
    for (x, fn_x) in ecdf.points() {
        let mut f = reference.cdf(x)?;
        let mut s = reference.sf(x)?;
        if clamp {
            f = f.clamp(CDF_CLAMP, 1.0 - CDF_CLAMP);
            s = s.clamp(CDF_CLAMP, 1.0 - CDF_CLAMP);
        } else if !(f > 0.0 && s > 0.0) {
            return Err(Error::NumericOverflow);
        }
        let d = fn_x - f;
        acc += d * d / (f * s);
    }
    Ok(acc)
}

/// `(reference quantile at (i - 0.5)/n, x_(i))` for `i = 1..=n`.
pub fn qq_pairs(samples: &[f64], reference: &DistributionRef) -> Result<Vec<(f64, f64)>> {
    let ecdf = EmpiricalCdf::new(samples)?;
    let n = ecdf.len() as f64;
    ecdf.sorted_samples()
        .iter()
        .enumerate()
        .map(|(i, &x)| Ok((reference.quantile((i as f64 + 0.5) / n)?, x)))
        .collect()
}

/// One bin of [`quantile_residual_breakdown`]: `(lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResidualBin {
    pub lower: f64,
    pub upper: f64,
    pub observed: u64,
    pub expected: f64,
    pub residual: f64,
}

/// Cuts the line at the reference quantiles `i / (k + 1)`, `i = 1..=k`, and
/// compares bin counts with the equal expected count `n / (k + 1)`.
pub fn quantile_residual_breakdown(
    samples: &[f64],
    reference: &DistributionRef,
    n_quantiles: usize,
) -> Result<Vec<ResidualBin>> {
    if n_quantiles == 0 {
        return Err(Error::InvalidParameter("need at least one quantile"));
    }
    if samples.is_empty() {
        return Err(Error::InvalidParameter("need at least one sample"));
    }
    let bins = n_quantiles + 1;
    let cuts: Vec<f64> = (1..=n_quantiles)
        .map(|i| reference.quantile(i as f64 / bins as f64))
        .collect::<Result<_>>()?;
    let mut observed = alloc::vec![0u64; bins];
    for &x in samples {
        observed[cuts.partition_point(|&c| c < x)] += 1;
    }
    let expected = samples.len() as f64 / bins as f64;
    Ok(observed
        .iter()
        .enumerate()
        .map(|(i, &o)| {
            let diff = o as f64 - expected;
            ResidualBin {
                lower: if i == 0 { f64::NEG_INFINITY } else { cuts[i - 1] },
                upper: if i == n_quantiles { f64::INFINITY } else { cuts[i] },
                observed: o,
                expected,
                residual: diff * diff / expected,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::StreamRng;
    use rand::SeedableRng;

    fn chi6() -> DistributionRef {
        DistributionRef::chi_square(6.0).unwrap()
    }

    #[test]
    fn single_median_sample() {
        let a = anderson_darling_statistic(&[0.5], &DistributionRef::Uniform, false).unwrap();
        assert!((a - (-1.0 + 2.0 * core::f64::consts::LN_2)).abs() < 1e-15);
        let med = chi6().quantile(0.5).unwrap();
        let a = anderson_darling_statistic(&[med], &chi6(), false).unwrap();
        assert!((a - 0.386_294_361_119_890_6).abs() < 1e-10);
    }

    #[test]
    fn cdf_saturation_is_an_error_unless_clamped() {
        let u = DistributionRef::Uniform;
        assert_eq!(anderson_darling_statistic(&[0.0, 0.5], &u, false), Err(Error::NumericOverflow));
        assert!(anderson_darling_statistic(&[0.0, 0.5], &u, true).unwrap().is_finite());
        let ecdf = EmpiricalCdf::new(&[1.0, 0.5]).unwrap();
        assert_eq!(cdf_scaling(&ecdf, &u, false), Err(Error::NumericOverflow));
        assert!(cdf_scaling(&ecdf, &u, true).unwrap().is_finite());
    }

    #[test]
    fn pit_invariance() {
        let reference = DistributionRef::chi_square(61.0).unwrap();
        let mut rng = StreamRng::seed_from_u64(5);
        let xs: Vec<f64> = (0..200).map(|_| reference.sample(&mut rng).unwrap()).collect();
        let us: Vec<f64> = xs.iter().map(|&x| reference.cdf(x).unwrap()).collect();
        let a = anderson_darling_statistic(&xs, &reference, false).unwrap();
        let b = anderson_darling_statistic(&us, &DistributionRef::Uniform, false).unwrap();
        assert!((a - b).abs() < 1e-12 * a.abs().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn ecdf_is_right_continuous_step() {
        let e = EmpiricalCdf::new(&[3.0, 1.0, 2.0, 2.0]).unwrap();
        assert_eq!(e.eval(0.9), 0.0);
        assert_eq!(e.eval(1.0), 0.25);
        assert_eq!(e.eval(2.0), 0.75);
        assert_eq!(e.eval(2.5), 0.75);
        assert_eq!(e.eval(3.0), 1.0);
        let pts: Vec<_> = e.points().collect();
        assert_eq!(pts, [(1.0, 0.25), (2.0, 0.75), (2.0, 0.75), (3.0, 1.0)]);
        assert!(EmpiricalCdf::new(&[]).is_err());
    }

    #[test]
    fn exact_quantile_ecdf_is_near_zero() {
        let r = chi6();
        let n = 500;
        let xs: Vec<f64> = (1..n).map(|i| r.quantile(i as f64 / n as f64).unwrap()).collect();
        let e = EmpiricalCdf::new(&xs).unwrap();
        let sim = cdf_similarity(&e, &r).unwrap();
        let scal = cdf_scaling(&e, &r, false).unwrap();
        let len = xs.len() as f64;
        assert!(sim <= 1.0 / len, "{sim}");
        assert!(scal < 0.05, "{scal}");
        assert!(scal >= 4.0 * sim);
    }

    #[test]
    fn qq_pairs_on_diagonal_for_exact_quantiles() {
        let r = chi6();
        let n = 40;
        let xs: Vec<f64> = (0..n).map(|i| r.quantile((i as f64 + 0.5) / n as f64).unwrap()).collect();
        for (t, s) in qq_pairs(&xs, &r).unwrap() {
            assert!((t - s).abs() < 1e-9 * s.max(1.0));
        }
        let single = qq_pairs(&[4.2], &r).unwrap();
        assert_eq!(single.len(), 1);
        assert!((single[0].0 - r.quantile(0.5).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn one_sample_per_bin_gives_zero_residuals() {
        let r = chi6();
        let k = 9;
        let xs: Vec<f64> = (0..=k).map(|i| r.quantile((i as f64 + 0.5) / (k + 1) as f64).unwrap()).collect();
        let bins = quantile_residual_breakdown(&xs, &r, k).unwrap();
        assert_eq!(bins.len(), k + 1);
        assert!(bins.iter().all(|b| b.observed == 1 && b.residual == 0.0));
        assert!(quantile_residual_breakdown(&xs, &r, 0).is_err());
    }

    #[test]
    fn null_p_value_floor() {
        let null = AdNullDistribution::from_statistics(10, alloc::vec![0.1, 0.5, 2.0]).unwrap();
        assert_eq!(null.p_value(100.0), 0.25);
        assert_eq!(null.p_value(0.0), 1.0);
        assert_eq!(null.p_value(0.5), 0.75);
    }
}
