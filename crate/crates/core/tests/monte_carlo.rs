//! Ensemble-level properties of degree vectors, checked by simulation.

use degree_mvn_core::stats::{mean, pearson_correlation, population_variance, sample_covariance};
use degree_mvn_core::{degree_pair_samples, score_graph, theoretical_correlation, GraphEnsembleSpec, MvnCase};

#[test]
fn degree_pair_correlation_and_covariance() {
    let spec = GraphEnsembleSpec::new(11, 0.3, 100_000, 101).unwrap();
    let pairs = degree_pair_samples(&spec, 2, 7).unwrap();
    let xs: Vec<f64> = pairs.iter().map(|p| p.0 as f64).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| p.1 as f64).collect();
    let r = pearson_correlation(&xs, &ys);
    let c = sample_covariance(&xs, &ys);
    // standard errors at 1e5 draws are about 0.003 (r) and 0.007 (cov)
    assert!((r - theoretical_correlation(11).unwrap()).abs() < 0.01, "r = {r}");
    assert!((c - 0.3 * 0.7).abs() < 0.02, "cov = {c}");
    assert!((mean(&xs) - 3.0).abs() < 0.02);
    assert!((population_variance(&xs) - 10.0 * 0.21).abs() < 0.04);
}

#[test]
fn degree_sum_variance_reflects_dependence() {
    // Var(sum x) = 2 Var(edges) * 2 = 4 C(n,2) p(1-p), which equals
    // N a + N (N - 1) b for the dependent model and exceeds N a.
    let (n, p) = (20usize, 0.4);
    let spec = GraphEnsembleSpec::new(n, p, 20_000, 5).unwrap();
    let sums: Vec<f64> = spec.graphs().map(|g| g.degrees().iter().map(|&d| d as f64).sum()).collect();
    let v = population_variance(&sums);
    let (a, b) = ((n - 1) as f64 * p * (1.0 - p), p * (1.0 - p));
    let dependent = n as f64 * a + (n * (n - 1)) as f64 * b;
    assert!((v / dependent - 1.0).abs() < 0.04, "ratio {}", v / dependent);
    assert!(v > 1.5 * n as f64 * a);
}

#[test]
fn null_rejection_rate_near_nominal() {
    let (n, p, reps) = (200usize, 0.3, 2_000usize);
    let spec = GraphEnsembleSpec::new(n, p, reps, 77).unwrap();
    let critical = degree_mvn_core::special::chi_square_upper_quantile(0.05, n as f64).unwrap();
    let rejected = spec
        .graphs()
        .filter(|g| score_graph(g, p, MvnCase::DepActual).unwrap().value().unwrap() > critical)
        .count();
    let rate = rejected as f64 / reps as f64;
    let sd = (0.05f64 * 0.95 / reps as f64).sqrt();
    assert!((rate - 0.05).abs() < 3.0 * sd, "rate {rate}");
}

#[test]
fn dependent_correction_does_not_depend_on_p() {
    // score_dep - score_indep = [1/(a-b) - 1/a] sum d^2 + alpha (sum d)^2.
    // With b = p(1-p), a = (n-1)b the first term is about n/(n-2) and the
    // second is -chi2_1 n/(n-2), whatever p is.
    let n = 50usize;
    let gaps = |p: f64| -> Vec<f64> {
        let spec = GraphEnsembleSpec::new(n, p, 4_000, 9).unwrap();
        spec.graphs()
            .map(|g| {
                let i = score_graph(&g, p, MvnCase::IndepActual).unwrap().value().unwrap();
                let d = score_graph(&g, p, MvnCase::DepActual).unwrap().value().unwrap();
                d - i
            })
            .collect()
    };
    let (g1, g5) = (gaps(0.1), gaps(0.5));
    // sd of one gap is about 1.5, so the means have sd about 0.024
    assert!(mean(&g1).abs() < 0.1 && mean(&g5).abs() < 0.1, "{} {}", mean(&g1), mean(&g5));
    let ratio = (population_variance(&g5) / population_variance(&g1)).sqrt();
    assert!((ratio - 1.0).abs() < 0.1, "sd ratio {ratio}");
}
