mod common;

use kclique::generate;
use kclique::oracle;
use kclique::orientation::OrientConfig;
use kclique::par;
use kclique::sampling::{analytic_variance, approx_count, approx_count_trials, colorful_sparsify};

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

fn estimates(g: &kclique::Graph, k: usize, c: u32, seeds: std::ops::Range<u64>) -> Vec<f64> {
    let cfg = OrientConfig::default();
    seeds
        .map(|s| approx_count(g, k, c, s, &cfg).unwrap().estimate)
        .collect()
}

#[test]
fn surviving_edges_of_k10_average_half() {
    let g = generate::complete(10);
    let kept: Vec<f64> = (0..10_000)
        .map(|s| colorful_sparsify(&g, 2, s).unwrap().m() as f64)
        .collect();
    let (mean, var) = mean_var(&kept);
    let se = (var / kept.len() as f64).sqrt();
    assert!((mean - 22.5).abs() <= 4.0 * se, "mean {mean} se {se}");
}

#[test]
fn triangles_of_k8_unbiased() {
    let g = generate::complete(8);
    let xs = estimates(&g, 3, 2, 0..20_000);
    let (mean, var) = mean_var(&xs);
    let se = (var / xs.len() as f64).sqrt();
    assert!((mean - 56.0).abs() <= 3.0 * se, "mean {mean} se {se}");
}

#[test]
fn unbiased_over_colors_and_sizes() {
    let g = generate::gnp(14, 0.6, 41);
    for k in [3, 4] {
        let exact = oracle::brute_force_count(&g, k).unwrap().total as f64;
        for c in [1, 2, 4] {
            let xs = estimates(&g, k, c, 0..6_000);
            let (mean, var) = mean_var(&xs);
            let tol = 4.0 * var.sqrt() / (xs.len() as f64).sqrt();
            assert!(
                (mean - exact).abs() <= tol.max(1e-9),
                "k={k} c={c}: {mean} vs {exact}"
            );
        }
    }
}

#[test]
fn sample_variance_tracks_analytic_variance() {
    let g = generate::gnp(12, 0.6, 42);
    let k = 3;
    let exact = oracle::brute_force_count(&g, k).unwrap().total as f64;
    let shared = oracle::shared_pairs(&g, k).unwrap();
    let expect = analytic_variance(exact, 0.5, k, &shared).unwrap();
    let xs = estimates(&g, k, 2, 1_000..21_000);
    let (_, var) = mean_var(&xs);
    assert!(
        (var - expect).abs() <= 0.2 * expect,
        "sample {var} analytic {expect}"
    );
}

#[test]
fn one_color_is_exact() {
    for g in common::gnp_family(10, 5, 30, &[0.3, 0.6], 43) {
        for k in 3..=5 {
            let exact = oracle::brute_force_count(&g, k).unwrap().total;
            let est = approx_count(&g, k, 1, 123, &OrientConfig::default()).unwrap();
            assert_eq!(est.sub_count, exact);
            assert_eq!(est.estimate, exact as f64);
        }
    }
}

#[test]
fn estimates_do_not_depend_on_thread_count() {
    let g = generate::gnp(120, 0.2, 44);
    let cfg = OrientConfig::default();
    let base = par::install(1, || approx_count_trials(&g, 4, 3, 7, 8, &cfg).unwrap());
    for t in common::THREADS {
        assert_eq!(
            par::install(t, || approx_count_trials(&g, 4, 3, 7, 8, &cfg).unwrap()),
            base
        );
        let a = par::install(t, || colorful_sparsify(&g, 3, 99).unwrap());
        assert_eq!(a, colorful_sparsify(&g, 3, 99).unwrap());
    }
}

#[test]
fn sparsified_graph_is_a_subgraph() {
    for g in common::gnp_family(20, 1, 60, &[0.2, 0.7], 45) {
        for c in [2, 3, 7] {
            let s = colorful_sparsify(&g, c, c as u64 * 31).unwrap();
            assert_eq!(s.n(), g.n());
            assert!(s.edges().all(|(u, v)| g.has_edge(u, v)));
        }
    }
}
