//! Special functions and the reference distributions used by the tests.
//!
//! Only elementary functions are taken from `libm`; the log-gamma function
//! is a Lanczos approximation (g = 7, nine coefficients) so every platform
//! produces the same bits.

use rand::distributions::Open01;
use rand::Rng;

use crate::math::{abs, exp, ln, ln1p, sqrt};
use crate::{Error, Result};

const MAX_ITER: usize = 500;
const REL_EPS: f64 = 1e-15;
const TINY: f64 = 1e-300;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps the series argument away from zero
        return ln_gamma(x + 1.0) - ln(x);
    }
    let z = x - 1.0;
    let mut series = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * ln(t) - t + ln(series)
}

/// Logarithms of the regularized incomplete gamma pair `(ln P(a, x), ln Q(a, x))`.
///
/// Series for `x < a + 1`, Lentz continued fraction otherwise. The tail that
/// is computed directly keeps full relative precision in log space.
fn ln_gamma_pq(a: f64, x: f64) -> Result<(f64, f64)> {
    if !(a > 0.0) || !(x >= 0.0) {
        return Err(Error::InvalidParameter("incomplete gamma needs a > 0 and x >= 0"));
    }
    if x == 0.0 {
        return Ok((f64::NEG_INFINITY, 0.0));
    }
    if x == f64::INFINITY {
        return Ok((0.0, f64::NEG_INFINITY));
    }
    let ln_prefactor = -x + a * ln(x) - ln_gamma(a);
    if x < a + 1.0 {
        let mut ap = a;
        let mut term = 1.0 / a;
        let mut sum = term;
        let mut converged = false;
        for _ in 0..MAX_ITER {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if abs(term) < abs(sum) * REL_EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("incomplete gamma series"));
        }
        let ln_p = ln_prefactor + ln(sum);
        Ok((ln_p, ln1p(-exp(ln_p))))
    } else {
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        let mut converged = false;
        for i in 1..=MAX_ITER {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if abs(d) < TINY {
                d = TINY;
            }
            c = b + an / c;
            if abs(c) < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let delta = d * c;
            h *= delta;
            if abs(delta - 1.0) < REL_EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("incomplete gamma continued fraction"));
        }
        let ln_q = ln_prefactor + ln(h);
        Ok((ln1p(-exp(ln_q)), ln_q))
    }
}

/// Regularized lower incomplete gamma `P(a, x)`.
pub fn regularized_gamma_p(a: f64, x: f64) -> Result<f64> {
    ln_gamma_pq(a, x).map(|(lp, _)| exp(lp))
}

/// Regularized upper incomplete gamma `Q(a, x) = 1 - P(a, x)`.
pub fn regularized_gamma_q(a: f64, x: f64) -> Result<f64> {
    ln_gamma_pq(a, x).map(|(_, lq)| exp(lq))
}

fn check_df(df: f64) -> Result<()> {
    if df > 0.0 && df.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter("degrees of freedom must be positive and finite"))
    }
}

fn check_chi_square_arg(x: f64, df: f64) -> Result<()> {
    check_df(df)?;
    if x >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter("chi-square argument must be non-negative"))
    }
}

pub fn chi_square_cdf(x: f64, df: f64) -> Result<f64> {
    check_chi_square_arg(x, df)?;
    regularized_gamma_p(df / 2.0, x / 2.0)
}

/// Upper tail `1 - F(x)`, computed without cancellation.
pub fn chi_square_sf(x: f64, df: f64) -> Result<f64> {
    check_chi_square_arg(x, df)?;
    regularized_gamma_q(df / 2.0, x / 2.0)
}

pub fn chi_square_ln_cdf(x: f64, df: f64) -> Result<f64> {
    check_chi_square_arg(x, df)?;
    ln_gamma_pq(df / 2.0, x / 2.0).map(|(lp, _)| lp)
}

pub fn chi_square_ln_sf(x: f64, df: f64) -> Result<f64> {
    check_chi_square_arg(x, df)?;
    ln_gamma_pq(df / 2.0, x / 2.0).map(|(_, lq)| lq)
}

/// Solves `f(x) = target` for increasing `f` on `(0, inf)` by bisection,
/// growing the bracket geometrically from `start`.
fn invert_increasing<F>(f: F, target: f64, start: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut lo = start;
    let mut hi = start;
    if f(hi)? < target {
        while f(hi)? < target {
            lo = hi;
            hi *= 2.0;
            if !hi.is_finite() {
                return Err(Error::NoConvergence("quantile bracket"));
            }
        }
    } else {
        lo = start / 2.0;
        while f(lo)? >= target {
            hi = lo;
            lo /= 2.0;
            if lo < f64::MIN_POSITIVE {
                return Ok(0.0);
            }
        }
    }
    for _ in 0..2_000 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-12 * hi || mid <= lo || mid >= hi {
            break;
        }
        if f(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `x` with `chi_square_cdf(x, df) = q`.
pub fn chi_square_quantile(q: f64, df: f64) -> Result<f64> {
    check_df(df)?;
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidParameter("quantile level must lie in (0, 1)"));
    }
    if q <= 0.5 {
        chi_square_quantile_from_ln_cdf(ln(q), df)
    } else {
        chi_square_upper_quantile(1.0 - q, df)
    }
}

/// `x` with `chi_square_sf(x, df) = q_upper`.
pub fn chi_square_upper_quantile(q_upper: f64, df: f64) -> Result<f64> {
    check_df(df)?;
    if !(q_upper > 0.0 && q_upper < 1.0) {
        return Err(Error::InvalidParameter("tail probability must lie in (0, 1)"));
    }
    let target = -ln(q_upper);
    invert_increasing(|x| chi_square_ln_sf(x, df).map(|v| -v), target, df)
}

/// `x` with `chi_square_ln_cdf(x, df) = ln_q`, for lower-tail levels too
/// small to represent as a probability.
pub fn chi_square_quantile_from_ln_cdf(ln_q: f64, df: f64) -> Result<f64> {
    check_df(df)?;
    if !(ln_q < 0.0) || ln_q == f64::NEG_INFINITY {
        return Err(Error::InvalidParameter("log quantile level must be finite and negative"));
    }
    invert_increasing(|x| chi_square_ln_cdf(x, df), ln_q, df)
}

/// Regularized incomplete beta `I_x(a, b)`.
pub fn regularized_beta(x: f64, a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter("incomplete beta needs a, b > 0 and x in [0, 1]"));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(x);
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * ln(x) + b * ln1p(-x);
    if x < (a + 1.0) / (a + b + 2.0) {
        Ok(exp(ln_front) * beta_continued_fraction(x, a, b)? / a)
    } else {
        Ok(1.0 - exp(ln_front) * beta_continued_fraction(1.0 - x, b, a)? / b)
    }
}

fn beta_continued_fraction(x: f64, a: f64, b: f64) -> Result<f64> {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if abs(d) < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if abs(d) < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if abs(c) < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if abs(d) < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if abs(c) < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if abs(delta - 1.0) < REL_EPS {
            return Ok(h);
        }
    }
    Err(Error::NoConvergence("incomplete beta continued fraction"))
}

pub fn student_t_cdf(t: f64, df: f64) -> Result<f64> {
    check_df(df)?;
    if t.is_nan() {
        return Err(Error::InvalidParameter("t statistic is NaN"));
    }
    if t == 0.0 {
        return Ok(0.5);
    }
    let tail = 0.5 * regularized_beta(df / (df + t * t), df / 2.0, 0.5)?;
    Ok(if t > 0.0 { 1.0 - tail } else { tail })
}

/// `P(|T| >= |t|)`, evaluated from the tail directly so small p-values keep
/// their precision.
pub fn student_t_two_sided_p(t: f64, df: f64) -> Result<f64> {
    check_df(df)?;
    if t.is_nan() {
        return Err(Error::InvalidParameter("t statistic is NaN"));
    }
    if t.is_infinite() {
        return Ok(0.0);
    }
    regularized_beta(df / (df + t * t), df / 2.0, 0.5)
}

/// `ln C(trials, k) + k ln p + (trials - k) ln(1 - p)`.
pub fn binomial_ln_pmf(k: u64, trials: u64, prob: f64) -> Result<f64> {
    if k > trials {
        return Err(Error::InvalidParameter("binomial outcome exceeds the number of trials"));
    }
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::InvalidParameter("binomial probability must lie in [0, 1]"));
    }
    if prob == 0.0 {
        return Ok(if k == 0 { 0.0 } else { f64::NEG_INFINITY });
    }
    if prob == 1.0 {
        return Ok(if k == trials { 0.0 } else { f64::NEG_INFINITY });
    }
    let (n, kf) = (trials as f64, k as f64);
    let ln_choose = ln_gamma(n + 1.0) - ln_gamma(kf + 1.0) - ln_gamma(n - kf + 1.0);
    Ok(ln_choose + kf * ln(prob) + (n - kf) * ln1p(-prob))
}

pub fn binomial_pmf(k: u64, trials: u64, prob: f64) -> Result<f64> {
    binomial_ln_pmf(k, trials, prob).map(exp)
}

/// A fully specified reference distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum DistributionRef {
    ChiSquare { df: f64 },
    StudentT { df: f64 },
    Binomial { trials: u64, prob: f64 },
    /// Uniform on `[0, 1]`; the image of any continuous reference under its own CDF.
    Uniform,
}

impl DistributionRef {
    pub fn chi_square(df: f64) -> Result<Self> {
        check_df(df)?;
        Ok(DistributionRef::ChiSquare { df })
    }

    pub fn student_t(df: f64) -> Result<Self> {
        check_df(df)?;
        Ok(DistributionRef::StudentT { df })
    }

    pub fn binomial(trials: u64, prob: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&prob) {
            return Err(Error::InvalidParameter("binomial probability must lie in [0, 1]"));
        }
        Ok(DistributionRef::Binomial { trials, prob })
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        match *self {
            DistributionRef::ChiSquare { df } => chi_square_cdf(x.max(0.0), df),
            DistributionRef::StudentT { df } => student_t_cdf(x, df),
            DistributionRef::Binomial { trials, prob } => {
                if x < 0.0 {
                    return Ok(0.0);
                }
                let top = if x >= trials as f64 { trials } else { crate::math::floor(x) as u64 };
                let mut acc = 0.0;
                for k in 0..=top {
                    acc += binomial_pmf(k, trials, prob)?;
                }
                Ok(acc.min(1.0))
            }
            DistributionRef::Uniform => Ok(x.clamp(0.0, 1.0)),
        }
    }

    /// `1 - F(x)`; the continuous families evaluate the upper tail directly.
    pub fn sf(&self, x: f64) -> Result<f64> {
        match *self {
            DistributionRef::ChiSquare { df } => chi_square_sf(x.max(0.0), df),
            DistributionRef::StudentT { df } => student_t_cdf(-x, df),
            DistributionRef::Binomial { .. } => self.cdf(x).map(|f| (1.0 - f).max(0.0)),
            DistributionRef::Uniform => Ok(1.0 - x.clamp(0.0, 1.0)),
        }
    }

    /// `ln F(x)`; the chi-square family stays finite far into the lower tail.
    pub fn ln_cdf(&self, x: f64) -> Result<f64> {
        match *self {
            DistributionRef::ChiSquare { df } => chi_square_ln_cdf(x.max(0.0), df),
            _ => self.cdf(x).map(ln),
        }
    }

    /// `ln(1 - F(x))`.
    pub fn ln_sf(&self, x: f64) -> Result<f64> {
        match *self {
            DistributionRef::ChiSquare { df } => chi_square_ln_sf(x.max(0.0), df),
            DistributionRef::Uniform => Ok(ln1p(-x.clamp(0.0, 1.0))),
            _ => self.sf(x).map(ln),
        }
    }

    /// Smallest `x` with `F(x) >= q` (exact inverse for continuous families).
    pub fn quantile(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParameter("quantile level must lie in (0, 1)"));
        }
        match *self {
            DistributionRef::ChiSquare { df } => chi_square_quantile(q, df),
            DistributionRef::StudentT { df } => {
                if q == 0.5 {
                    return Ok(0.0);
                }
                // symmetric; solve on the positive half-line
                let upper = if q > 0.5 { 1.0 - q } else { q };
                let t = invert_increasing(|t| student_t_cdf(-t, df).map(|v| -v), -upper, 1.0)?;
                Ok(if q > 0.5 { t } else { -t })
            }
            DistributionRef::Binomial { trials, prob } => {
                let mut acc = 0.0;
                for k in 0..=trials {
                    acc += binomial_pmf(k, trials, prob)?;
                    if acc >= q {
                        return Ok(k as f64);
                    }
                }
                Ok(trials as f64)
            }
            DistributionRef::Uniform => Ok(q),
        }
    }

    /// Inverse-transform draw.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<f64> {
        let u: f64 = rng.sample(Open01);
        self.quantile(u)
    }

    pub fn mean(&self) -> f64 {
        match *self {
            DistributionRef::ChiSquare { df } => df,
            DistributionRef::StudentT { df } => {
                if df > 1.0 {
                    0.0
                } else {
                    f64::NAN
                }
            }
            DistributionRef::Binomial { trials, prob } => trials as f64 * prob,
            DistributionRef::Uniform => 0.5,
        }
    }

    pub fn std_dev(&self) -> f64 {
        match *self {
            DistributionRef::ChiSquare { df } => sqrt(2.0 * df),
            DistributionRef::StudentT { df } => {
                if df > 2.0 {
                    sqrt(df / (df - 2.0))
                } else {
                    f64::NAN
                }
            }
            DistributionRef::Binomial { trials, prob } => sqrt(trials as f64 * prob * (1.0 - prob)),
            DistributionRef::Uniform => sqrt(1.0 / 12.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{LN_2, PI};

    fn erlang_cdf(k: u32, x: f64) -> f64 {
        // P(chi^2_{2k} <= x) = 1 - exp(-x/2) sum_{j<k} (x/2)^j / j!
        let h = x / 2.0;
        let mut term = 1.0;
        let mut sum = 1.0;
        for j in 1..k {
            term *= h / j as f64;
            sum += term;
        }
        1.0 - (-h).exp() * sum
    }

    #[test]
    fn ln_gamma_at_integers_and_half() {
        let mut fact = 1.0f64;
        for n in 1..30u32 {
            if n > 1 {
                fact *= (n - 1) as f64;
            }
            assert!((ln_gamma(n as f64) - fact.ln()).abs() < 1e-12 * fact.ln().max(1.0), "n={n}");
        }
        assert!((ln_gamma(0.5) - PI.sqrt().ln()).abs() < 1e-14);
        assert!((ln_gamma(0.1) - 2.252_712_651_734_206).abs() < 1e-13);
    }

    #[test]
    fn chi_square_cdf_edge_values() {
        for df in [1.0, 6.0, 61.0] {
            assert_eq!(chi_square_cdf(0.0, df).unwrap(), 0.0);
        }
        assert!((chi_square_cdf(2.0 * LN_2, 2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((chi_square_cdf(12.592, 6.0).unwrap() - 0.95).abs() < 1e-4);
        assert!(chi_square_cdf(-1.0, 3.0).is_err());
        assert!(chi_square_cdf(1.0, 0.0).is_err());
        assert!(chi_square_cdf(1.0, -2.0).is_err());
    }

    #[test]
    fn chi_square_matches_erlang_closed_form() {
        for k in 1..=5u32 {
            for i in 1..200 {
                let x = i as f64 * 0.15;
                let got = chi_square_cdf(x, 2.0 * k as f64).unwrap();
                assert!((got - erlang_cdf(k, x)).abs() < 1e-12, "k={k} x={x}");
            }
        }
    }

    #[test]
    fn chi_square_quantiles() {
        let q6 = chi_square_quantile(0.95, 6.0).unwrap();
        assert!((q6 - 12.591_587_243_743_977).abs() < 1e-8, "{q6}");
        let q61 = chi_square_quantile(0.95, 61.0).unwrap();
        assert!((q61 - 80.232).abs() < 1e-3, "{q61}");
        assert!((chi_square_cdf(q61, 61.0).unwrap() - 0.95).abs() < 1e-9);
        assert!(chi_square_quantile(0.0, 6.0).is_err());
        assert!(chi_square_quantile(1.0, 6.0).is_err());
    }

    #[test]
    fn chi_square_quantile_round_trip_every_tail() {
        for df in [6.0, 61.0, 499.0] {
            for x in [1.0, 10.0, 100.0] {
                let ln_p = chi_square_ln_cdf(x, df).unwrap();
                let back = if ln_p < -LN_2 {
                    chi_square_quantile_from_ln_cdf(ln_p, df).unwrap()
                } else {
                    chi_square_upper_quantile(chi_square_sf(x, df).unwrap(), df).unwrap()
                };
                assert!((back - x).abs() < 1e-8 * x, "df={df} x={x} back={back}");
                let p = chi_square_cdf(x, df).unwrap();
                if p > 1e-300 && p < 1.0 - 1e-12 {
                    let back = chi_square_quantile(p, df).unwrap();
                    assert!((back - x).abs() < 1e-8 * x, "df={df} x={x}");
                }
            }
        }
    }

    #[test]
    fn cdf_monotone_on_grid() {
        for dist in [
            DistributionRef::chi_square(6.0).unwrap(),
            DistributionRef::chi_square(499.0).unwrap(),
            DistributionRef::student_t(3.0).unwrap(),
            DistributionRef::binomial(60, 0.1).unwrap(),
        ] {
            let mut prev = 0.0;
            for i in -200..2_000 {
                let f = dist.cdf(i as f64 * 0.5).unwrap();
                assert!((0.0..=1.0).contains(&f));
                assert!(f >= prev - 1e-15, "{dist:?} at {i}");
                prev = f;
            }
        }
    }

    #[test]
    fn binomial_pmf_values() {
        assert_eq!(binomial_pmf(0, 10, 0.0).unwrap(), 1.0);
        assert_eq!(binomial_pmf(3, 10, 0.0).unwrap(), 0.0);
        assert_eq!(binomial_pmf(10, 10, 1.0).unwrap(), 1.0);
        assert!(binomial_pmf(11, 10, 0.5).is_err());
        let mean: f64 = (0..=60).map(|k| k as f64 * binomial_pmf(k, 60, 0.1).unwrap()).sum();
        assert!((mean - 6.0).abs() < 1e-12);
        // naive product oracle: C(60,6) 0.1^6 0.9^54
        let mut choose = 1.0f64;
        for i in 0..6 {
            choose *= (60 - i) as f64 / (i + 1) as f64;
        }
        let naive = choose * 0.1f64.powi(6) * 0.9f64.powi(54);
        assert!((binomial_pmf(6, 60, 0.1).unwrap() - naive).abs() < 1e-12);
    }

    #[test]
    fn binomial_pmf_sums_to_one() {
        for trials in [1u64, 5, 60, 499, 999] {
            for prob in [0.01, 0.1, 0.3, 0.5, 0.99] {
                let s: f64 = (0..=trials).map(|k| binomial_pmf(k, trials, prob).unwrap()).sum();
                assert!((s - 1.0).abs() < 1e-12, "trials={trials} prob={prob} sum={s}");
            }
        }
    }

    #[test]
    fn student_t_values() {
        assert_eq!(student_t_cdf(0.0, 4.0).unwrap(), 0.5);
        assert!((student_t_cdf(1.0, 1.0).unwrap() - 0.75).abs() < 1e-14);
        for t in [0.3, 1.0, 2.5] {
            // Cauchy: 1/2 + atan(t)/pi
            assert!((student_t_cdf(t, 1.0).unwrap() - (0.5 + t.atan() / PI)).abs() < 1e-14);
        }
        assert!((student_t_cdf(1.96, 9999.0).unwrap() - 0.975).abs() < 2e-4);
        for t in [0.1, 1.3, 4.0] {
            let up = student_t_cdf(t, 7.0).unwrap();
            let down = student_t_cdf(-t, 7.0).unwrap();
            assert!((up + down - 1.0).abs() < 1e-14);
            let two = student_t_two_sided_p(t, 7.0).unwrap();
            assert!((two - 2.0 * down).abs() < 1e-14);
        }
        assert!(student_t_cdf(1.0, 0.0).is_err());
    }

    #[test]
    fn t_quantile_inverts_cdf() {
        let t = DistributionRef::student_t(5.0).unwrap();
        for q in [0.01, 0.2, 0.5, 0.8, 0.975] {
            let x = t.quantile(q).unwrap();
            assert!((t.cdf(x).unwrap() - q).abs() < 1e-10);
        }
    }

    #[test]
    fn binomial_reference_quantile_is_generalized_inverse() {
        let b = DistributionRef::binomial(60, 0.1).unwrap();
        for q in [0.05, 0.5, 0.95] {
            let k = b.quantile(q).unwrap();
            assert!(b.cdf(k).unwrap() >= q);
            assert!(k == 0.0 || b.cdf(k - 1.0).unwrap() < q);
        }
    }
}
