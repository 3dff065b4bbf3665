//! Large-n behaviour of the cubic likelihood estimators.

use degree_mvn_core::stats::sorted_quantile;
use degree_mvn_core::{estimate_cubic_dependent, estimate_cubic_independent, moment_estimate, DegreeData, GraphEnsembleSpec};

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    sorted_quantile(&xs, 0.5)
}

#[test]
fn cubic_roots_approach_the_moment_estimate() {
    let mut last = (f64::INFINITY, f64::INFINITY);
    for n in [50usize, 200, 1000] {
        let spec = GraphEnsembleSpec::new(n, 0.3, 100, 17).unwrap();
        let (mut gi, mut gd) = (Vec::new(), Vec::new());
        for g in spec.graphs() {
            let d = DegreeData::from_graph(&g);
            let m = moment_estimate(&d);
            let i = estimate_cubic_independent(&d);
            let dep = estimate_cubic_dependent(&d).unwrap();
            assert!(i.converged && dep.converged);
            gi.push((i.p_hat - m).abs());
            gd.push((dep.p_hat - m).abs());
        }
        let now = (median(gi), median(gd));
        assert!(now.0 < last.0 && now.1 < last.1, "n = {n}: {now:?} vs {last:?}");
        last = now;
    }
}

#[test]
fn estimates_are_consistent() {
    for p in [0.1, 0.5, 0.9] {
        let spec = GraphEnsembleSpec::new(400, p, 20, 23).unwrap();
        for g in spec.graphs() {
            let d = DegreeData::from_graph(&g);
            assert!((estimate_cubic_independent(&d).p_hat - p).abs() < 0.01);
            assert!((estimate_cubic_dependent(&d).unwrap().p_hat - p).abs() < 0.01);
        }
    }
}
