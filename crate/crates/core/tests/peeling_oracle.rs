mod common;

use kclique::counting::{count_per_vertex, CountConfig};
use kclique::generate;
use kclique::graph::{DirectedGraph, Graph, VertexId};
use kclique::oracle;
use kclique::orientation::{self, OrientConfig, Strategy};
use kclique::par;
use kclique::peeling::{peel_approx, peel_exact, Peeler, VertexState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn oriented(g: &Graph) -> DirectedGraph {
    orientation::orient(g, &OrientConfig::default()).unwrap()
}

#[test]
fn batch_updates_match_recounting() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for g in common::gnp_family(40, 4, 30, &[0.3, 0.5, 0.7], 52) {
        for k in [3, 4] {
            for s in [Strategy::GoodrichPszona, Strategy::Original] {
                let dg = orientation::orient(&g, &OrientConfig::new(s)).unwrap();
                let start = count_per_vertex(&dg, k, &CountConfig::default()).unwrap();
                let mut peeler = Peeler::new(&g, &dg, k, start.per_vertex.unwrap()).unwrap();
                let mut alive = vec![true; g.n()];
                let mut before = start.total;
                while alive.iter().any(|&a| a) {
                    let batch: Vec<VertexId> = (0..g.n())
                        .filter(|&v| alive[v] && rng.random_bool(0.3))
                        .map(|v| v as VertexId)
                        .collect();
                    let r = peeler.remove_batch(&batch).unwrap();
                    for &v in &batch {
                        alive[v as usize] = false;
                    }
                    let rest = g.filter_edges(|u, v| alive[u as usize] && alive[v as usize]);
                    let truth = oracle::brute_force_count(&rest, k).unwrap();
                    assert_eq!(before - truth.total, r.removed);
                    before = truth.total;
                    let pv = truth.per_vertex.unwrap();
                    for v in 0..g.n() {
                        if alive[v] {
                            assert_eq!(peeler.count(v as VertexId), pv[v]);
                            assert_eq!(peeler.state(v as VertexId), VertexState::Alive);
                        } else {
                            assert_eq!(peeler.state(v as VertexId), VertexState::Peeled);
                        }
                    }
                    assert!(r.changed.windows(2).all(|w| w[0] < w[1]));
                    assert!(r.changed.iter().all(|&u| alive[u as usize]));
                }
            }
        }
    }
}

#[test]
fn removed_cliques_sum_to_total() {
    for g in common::gnp_family(30, 5, 60, &[0.2, 0.5], 53) {
        let dg = oriented(&g);
        for k in 2..=5 {
            let e = peel_exact(&g, &dg, k).unwrap();
            assert_eq!(e.removed_per_round.iter().sum::<u64>(), e.total_cliques);
            assert_eq!(e.rho, e.removed_per_round.len());
            let a = peel_approx(&g, &dg, k, 0.5).unwrap();
            assert_eq!(a.removed_per_round.iter().sum::<u64>(), a.total_cliques);
            assert_eq!(a.total_cliques, e.total_cliques);
        }
    }
}

#[test]
fn core_numbers_match_sequential_reference() {
    for g in common::gnp_family(60, 2, 16, &[0.3, 0.5, 0.8], 54) {
        for k in [2, 3, 4] {
            for s in Strategy::ALL {
                let dg = orientation::orient(&g, &OrientConfig::new(s)).unwrap();
                let e = peel_exact(&g, &dg, k).unwrap();
                assert_eq!(
                    e.core.unwrap(),
                    oracle::sequential_core_numbers(&g, k).unwrap()
                );
            }
        }
    }
}

#[test]
fn densities_meet_approximation_guarantees() {
    for g in common::gnp_family(60, 2, 14, &[0.3, 0.5, 0.8], 55) {
        let dg = oriented(&g);
        for k in [3, 4] {
            let opt = oracle::exact_densest(&g, k).unwrap().density();
            let e = peel_exact(&g, &dg, k).unwrap();
            assert!(e.best_density >= opt / k as f64 - 1e-12);
            assert!(e.best_density <= opt + 1e-12);
            for eps in [0.1, 0.5, 1.0] {
                let a = peel_approx(&g, &dg, k, eps).unwrap();
                assert!(a.best_density >= opt / (k as f64 * (1.0 + eps)) - 1e-12);
                assert!(a.best_density <= opt + 1e-12);
            }
        }
    }
}

#[test]
fn dense_vertices_realize_the_reported_density() {
    for g in common::gnp_family(20, 5, 30, &[0.3, 0.6], 56) {
        let dg = oriented(&g);
        for k in [3, 4] {
            for out in [
                peel_exact(&g, &dg, k).unwrap(),
                peel_approx(&g, &dg, k, 0.5).unwrap(),
            ] {
                let mut keep = vec![false; g.n()];
                for &v in &out.dense_vertices {
                    keep[v as usize] = true;
                }
                let sub = g.filter_edges(|u, v| keep[u as usize] && keep[v as usize]);
                let inside = oracle::brute_force_count(&sub, k).unwrap().total;
                let size = out.dense_vertices.len().max(1);
                assert_eq!(inside as f64 / size as f64, out.best_density);
            }
        }
    }
}

#[test]
fn core_numbers_define_nested_cores() {
    for g in common::gnp_family(20, 5, 30, &[0.4, 0.7], 57) {
        let dg = oriented(&g);
        for k in [3, 4] {
            let core = peel_exact(&g, &dg, k).unwrap().core.unwrap();
            let mut levels = core.clone();
            levels.dedup();
            for &c in &levels {
                let keep: Vec<bool> = core.iter().map(|&x| x >= c).collect();
                let sub = g.filter_edges(|u, v| keep[u as usize] && keep[v as usize]);
                let pv = oracle::brute_force_count(&sub, k)
                    .unwrap()
                    .per_vertex
                    .unwrap();
                for v in 0..g.n() {
                    if keep[v] {
                        assert!(
                            pv[v] >= c,
                            "vertex {v} has {} cliques inside its {c}-core",
                            pv[v]
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn approx_round_count_is_logarithmic() {
    for g in common::gnp_family(40, 2, 40, &[0.3, 0.6, 0.9], 58) {
        let dg = oriented(&g);
        for eps in [0.5, 1.0] {
            let a = peel_approx(&g, &dg, 3, eps).unwrap();
            let bound = ((g.n() as f64).ln() / (1.0 + eps / 2.0).ln()).ceil() as usize + 2;
            assert!(a.rho <= bound.max(1), "rho {} bound {bound}", a.rho);
        }
    }
}

#[test]
fn peeling_does_not_depend_on_thread_count() {
    let g = generate::planted_clique(250, 0.06, 10, 59);
    let dg = oriented(&g);
    for k in [3, 5] {
        let e = par::install(1, || peel_exact(&g, &dg, k).unwrap());
        let a = par::install(1, || peel_approx(&g, &dg, k, 0.5).unwrap());
        for t in common::THREADS {
            assert_eq!(par::install(t, || peel_exact(&g, &dg, k).unwrap()), e);
            assert_eq!(par::install(t, || peel_approx(&g, &dg, k, 0.5).unwrap()), a);
        }
    }
}

#[test]
fn rejects_bad_parameters() {
    let g = generate::complete(5);
    let dg = oriented(&g);
    assert!(peel_exact(&g, &dg, 1).is_err());
    assert!(peel_approx(&g, &dg, 3, 0.0).is_err());
    assert!(peel_approx(&g, &dg, 3, f64::NAN).is_err());
}
