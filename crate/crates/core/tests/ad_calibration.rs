//! Calibration of the Anderson–Darling Monte Carlo p-value and the
//! distribution-level diagnostics built on the same machinery.

use degree_mvn_core::gof::{anderson_darling_statistic, qq_pairs, quantile_residual_breakdown, AdNullDistribution};
use degree_mvn_core::{DistributionRef, SeedSequence, StreamDomain};

fn max_uniform_deviation(mut ps: Vec<f64>) -> f64 {
    ps.sort_by(f64::total_cmp);
    let n = ps.len() as f64;
    ps.iter()
        .enumerate()
        .map(|(i, &p)| ((i + 1) as f64 / n - p).abs().max((p - i as f64 / n).abs()))
        .fold(0.0, f64::max)
}

#[test]
fn null_p_values_are_uniform() {
    let size = 60;
    let reference = DistributionRef::chi_square(6.0).unwrap();
    let null = AdNullDistribution::simulate(size, 1_999, &SeedSequence::new(1)).unwrap();
    let seeds = SeedSequence::new(2);
    let ps: Vec<f64> = (0..500)
        .map(|run| {
            let mut rng = seeds.stream(StreamDomain::Custom(7), run);
            let xs: Vec<f64> = (0..size).map(|_| reference.sample(&mut rng).unwrap()).collect();
            null.p_value(anderson_darling_statistic(&xs, &reference, false).unwrap())
        })
        .collect();
    let dev = max_uniform_deviation(ps);
    assert!(dev < 0.08, "max ECDF deviation {dev}");
}

#[test]
fn misspecified_reference_is_detected() {
    let size = 200;
    let truth = DistributionRef::chi_square(8.0).unwrap();
    let wrong = DistributionRef::chi_square(6.0).unwrap();
    let null = AdNullDistribution::simulate(size, 999, &SeedSequence::new(3)).unwrap();
    let mut rng = SeedSequence::new(4).stream(StreamDomain::Custom(1), 0);
    let xs: Vec<f64> = (0..size).map(|_| truth.sample(&mut rng).unwrap()).collect();
    let p = null.p_value(anderson_darling_statistic(&xs, &wrong, false).unwrap());
    assert_eq!(p, 1.0 / 1000.0);
}

#[test]
fn qq_pairs_of_chi_square_draws_follow_the_diagonal() {
    let reference = DistributionRef::chi_square(6.0).unwrap();
    let mut rng = SeedSequence::new(5).stream(StreamDomain::Custom(2), 0);
    let xs: Vec<f64> = (0..20_000).map(|_| reference.sample(&mut rng).unwrap()).collect();
    let qq = qq_pairs(&xs, &reference).unwrap();
    // central order statistics sit within a few standard errors of their quantiles
    for &(t, s) in qq.iter().skip(1_000).step_by(997).take(18) {
        assert!((t - s).abs() < 0.15, "theoretical {t} sample {s}");
    }
}

#[test]
fn uniform_draws_give_flat_residuals() {
    let mut rng = SeedSequence::new(6).stream(StreamDomain::Custom(3), 0);
    let xs: Vec<f64> = (0..10_000).map(|_| DistributionRef::Uniform.sample(&mut rng).unwrap()).collect();
    let bins = quantile_residual_breakdown(&xs, &DistributionRef::Uniform, 99).unwrap();
    assert_eq!(bins.len(), 100);
    assert_eq!(bins.iter().map(|b| b.observed).sum::<u64>(), 10_000);
    // sum of residuals is Pearson's chi-square with 99 df: mean 99, sd 14
    let total: f64 = bins.iter().map(|b| b.residual).sum();
    assert!((total - 99.0).abs() < 5.0 * 14.07, "total {total}");
}
